// Command-line front end: builds, checks, decomposes and factorizes algebras stored as
// bundle documents. Reports go to stdout as one JSON record per line; a short human
// summary goes to stderr. Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 input or usage error.

#include "malcev/malcev.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace malcev;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

bool g_timing = true;

void emit(const Report& r) {
  std::cout << to_json(r, g_timing).dump() << "\n";
  std::cerr << r.check << ": " << to_string(r.status) << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
}

void emit_record(const std::string& kind, nlohmann::ordered_json payload) {
  nlohmann::ordered_json j;
  j["record"] = kind;
  for (auto& [k, v] : payload.items()) j[k] = v;
  std::cout << j.dump() << "\n";
}

void output_bundle(const AlgebraBundle& b, const std::string& path) {
  if (path.empty() || path == "-") std::cout << serialize_bundle(b);
  else write_bundle(b, path);
}

int status_code(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return r.status == Status::error ? kInputError : kFail;
  return kPass;
}

/// Mathematical failures carry a witness and exit 1; malformed input exits 2.
int report_error(const std::string& check, const MalcevError& e) {
  Report r;
  r.check = check;
  r.status = e.kind() == ErrorKind::invalid_input ? Status::error : Status::fail;
  r.detail = e.what();
  if (!e.witness().indices.empty() || !e.witness().vectors.empty()) r.witness = e.witness();
  emit(r);
  return r.status == Status::error ? kInputError : kFail;
}

M7Variant parse_variant(const std::string& name, const std::string& gamma) {
  if (name == "split") return M7Variant::split();
  if (name == "division") {
    Scalar g = parse_scalar(gamma);
    if (is_zero(g)) throw std::invalid_argument("gamma must be nonzero");
    return M7Variant::division(g);
  }
  throw std::invalid_argument("unknown variant '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Malcev algebras and superalgebras"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit timing fields from reports");

  // build
  auto* build = app.add_subcommand("build", "Construct an algebra and write its bundle");
  std::string build_what, variant = "split", gamma = "-1", coords, out_path, embedding_out, form_out, involution_out;
  build->add_option("what", build_what, "m7 | coords | reg-module")->required();
  build->add_option("--variant", variant, "split | division");
  build->add_option("--gamma", gamma, "Nonzero rational parameter of the division variant");
  build->add_option("--coords", coords, "Coordinate algebra: F, dual, quadratic, truncated3, lambda1, lambda2, dual-lambda1");
  build->add_option("-o,--output", out_path, "Output file (stdout when omitted)");
  build->add_option("--embedding-out", embedding_out, "Also write the canonical embedding bundle");
  build->add_option("--form-out", form_out, "Also write the induced bilinear form bundle");
  build->add_option("--involution-out", involution_out, "Also write the induced involution bundle");

  // check
  auto* check = app.add_subcommand("check", "Run identity checks on an algebra");
  bool do_malcev = false, do_h = false, do_simple = false;
  std::string check_file;
  check->add_flag("--malcev", do_malcev, "Malcev (super)identity on all basis quadruples");
  check->add_flag("--h-variety", do_h, "Identity h = 0 on all basis quintuples");
  check->add_flag("--simple", do_simple, "No proper nonzero (graded) ideal");
  check->add_option("file", check_file, "Algebra bundle")->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Split the host into copies of the regular module");
  std::string dec_file, dec_emb;
  decompose->add_option("file", dec_file, "Algebra bundle")->required();
  decompose->add_option("--embedding", dec_emb, "Embedding bundle")->required();

  // factorize
  auto* factorize = app.add_subcommand("factorize", "Recover the coordinate algebra U with M = M7 (x) U");
  std::string fac_file, fac_emb, fac_inv, fac_form, fac_out;
  factorize->add_option("file", fac_file, "Algebra bundle")->required();
  factorize->add_option("--embedding", fac_emb, "Embedding bundle")->required();
  factorize->add_option("--involution", fac_inv, "Bundle holding an involution");
  factorize->add_option("--form", fac_form, "Bundle holding a bilinear form");
  factorize->add_option("-o,--output", fac_out, "Write the recovered U bundle here");

  // coordinatize
  auto* coordinatize = app.add_subcommand("coordinatize", "Module T(W) over M7(U) from a U-module W");
  std::string co_u, co_w, co_out;
  coordinatize->add_option("u_file", co_u, "Coordinate algebra bundle")->required();
  coordinatize->add_option("w_file", co_w, "Module bundle (action over U)")->required();
  coordinatize->add_option("-o,--output", co_out, "Write the module bundle here");

  // envelope
  auto* envelope = app.add_subcommand("envelope", "Grassmann envelope of a superalgebra");
  std::string env_file, env_out;
  unsigned generators = 2;
  envelope->add_option("file", env_file, "Superalgebra bundle")->required();
  envelope->add_option("--generators", generators, "Number of Grassmann generators")->check(CLI::Range(0u, 8u));
  envelope->add_option("-o,--output", env_out, "Write the envelope bundle here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  g_timing = !no_timing;

  try {
    if (*build) {
      const M7Variant v = parse_variant(variant, gamma);
      if (build_what == "m7") {
        Algebra m = build_m7(v);
        AlgebraBundle b;
        if (coords.empty()) {
          b = AlgebraBundle::from_algebra(m);
          if (!embedding_out.empty()) write_bundle(AlgebraBundle::from_embedding(7, Embedding::identity(v)), embedding_out);
        } else {
          Algebra u = sample_coordinates(coords);
          Algebra t = tensor_with_coordinates(m, u);
          b = AlgebraBundle::from_algebra(t);
          if (!embedding_out.empty())
            write_bundle(AlgebraBundle::from_embedding(t.dim(), Embedding::canonical(v, u)), embedding_out);
        }
        b.variant = v.name();
        if (v.kind == M7Variant::Kind::division) b.gamma = v.gamma;
        const Algebra u = coords.empty() ? field_algebra() : sample_coordinates(coords);
        if (!form_out.empty()) {
          AlgebraBundle f;
          f.dim = b.dim;
          f.labels = b.labels;
          f.form = induced_form(canonical_form_m7(v), u).gram;
          write_bundle(f, form_out);
        }
        if (!involution_out.empty()) {
          AlgebraBundle s;
          s.dim = b.dim;
          s.labels = b.labels;
          s.involution = induced_involution(7, u).matrix;
          write_bundle(s, involution_out);
        }
        output_bundle(b, out_path);
      } else if (build_what == "coords") {
        if (coords.empty()) throw std::invalid_argument("--coords is required");
        output_bundle(AlgebraBundle::from_algebra(sample_coordinates(coords)), out_path);
      } else if (build_what == "reg-module") {
        if (coords.empty()) throw std::invalid_argument("--coords is required");
        output_bundle(AlgebraBundle::from_representation(regular_representation(sample_coordinates(coords))), out_path);
      } else {
        throw std::invalid_argument("unknown build target '" + build_what + "'");
      }
      return kPass;
    }

    if (*check) {
      Algebra a = read_bundle(check_file).algebra();
      if (!do_malcev && !do_h && !do_simple) do_malcev = true;
      std::vector<Report> reports;
      if (do_malcev) reports.push_back(timed([&] { return verify_malcev(a); }));
      if (do_h) reports.push_back(timed([&] { return verify_h_variety(a, false); }));
      if (do_simple) reports.push_back(timed([&] { return check_simple(a); }));
      for (const auto& r : reports) emit(r);
      return status_code(reports);
    }

    if (*decompose) {
      Algebra host = read_bundle(dec_file).algebra();
      Embedding e = read_bundle(dec_emb).embedding_data();
      Report emb = timed([&] { return verify_embedding(host, e); });
      emit(emb);
      if (!emb.passed()) return kFail;
      Algebra src = e.source();
      Representation rho = adjoint_restriction(host, src, e.images);
      try {
        Decomposition d = decompose_into_irreducibles(rho);
        for (std::size_t c = 0; c < d.components.size(); ++c) {
          const auto& comp = d.components[c];
          nlohmann::ordered_json j;
          j["index"] = c;
          j["parity"] = comp.parity;
          j["witness"] = {host.label(comp.carrier_index), src.label(comp.a), src.label(comp.b)};
          auto cols = nlohmann::ordered_json::array();
          for (std::size_t z = 0; z < src.dim(); ++z) cols.push_back(vector_to_json(comp.iso.column(z)));
          j["iso_columns"] = cols;
          emit_record("component", j);
        }
        Report r = timed([&] { return check_decomposition(rho, d); });
        emit(r);
        return status_code({r});
      } catch (const MalcevError& err) {
        return report_error("decomposition", err);
      }
    }

    if (*factorize) {
      Algebra host = read_bundle(fac_file).algebra();
      Embedding e = read_bundle(fac_emb).embedding_data();
      if (fac_inv.empty() != fac_form.empty()) throw std::invalid_argument("--involution and --form go together");
      try {
        FactorizationResult res;
        std::vector<Report> certificate;
        if (!fac_inv.empty()) {
          auto inv = read_bundle(fac_inv).involution_data();
          auto form = read_bundle(fac_form).form_data();
          InvolutiveFactorization r = factorize_with_involution(host, e, inv, form);
          res = std::move(r.factorization);
          certificate = std::move(r.certificate);
        } else {
          res = kronecker_factorize(host, e);
        }
        for (const auto& r : res.checks) emit(r);
        for (const auto& r : certificate) emit(r);
        nlohmann::ordered_json j;
        j["dim"] = res.coordinates.dim();
        j["parity"] = res.coordinates.parities();
        auto w = nlohmann::ordered_json::array();
        for (std::size_t k = 1; k < res.witnesses.size(); ++k)
          w.push_back({host.label(res.witnesses[k][0]), e.source().label(res.witnesses[k][1]),
                       e.source().label(res.witnesses[k][2])});
        j["generators"] = w;
        j["bundle"] = nlohmann::ordered_json::parse(serialize_bundle(AlgebraBundle::from_algebra(res.coordinates)));
        emit_record("coordinates", j);
        if (!fac_out.empty()) write_bundle(AlgebraBundle::from_algebra(res.coordinates), fac_out);
        return kPass;
      } catch (const MalcevError& err) {
        return report_error("factorization", err);
      }
    }

    if (*coordinatize) {
      Algebra u = read_bundle(co_u).algebra();
      Representation w = read_bundle(co_w).representation(u);
      try {
        CoordinatizedModule cm = coordinatize_module(u, w);
        emit(cm.containment);
        Report m = timed([&] { return verify_module(cm.rep.acting, cm.rep); });
        emit(m);
        if (!co_out.empty()) write_bundle(AlgebraBundle::from_representation(cm.rep), co_out);
        return status_code({cm.containment, m});
      } catch (const MalcevError& err) {
        return report_error("coordinatize", err);
      }
    }

    if (*envelope) {
      Algebra a = read_bundle(env_file).algebra();
      Algebra g = grassmann_envelope(a, generators);
      Report direct = timed([&] { return verify_malcev(a); });
      direct.check = "malcev-super";
      Report env = timed([&] { return verify_malcev(g); });
      env.check = "malcev-envelope";
      emit(direct);
      emit(env);
      if (!env_out.empty()) write_bundle(AlgebraBundle::from_algebra(g), env_out);
      if (direct.passed() != env.passed()) {
        Report r = Report::fail("envelope-agreement", Witness{}, "direct and envelope checks disagree");
        emit(r);
        return kFail;
      }
      return status_code({direct, env});
    }
  } catch (const BundleError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const MalcevError& e) {
    return report_error("input", e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
