#ifndef MALCEV_BUNDLE_HPP
#define MALCEV_BUNDLE_HPP

#include "malcev/algebra.hpp"
#include "malcev/factorization.hpp"
#include "malcev/involution.hpp"
#include "malcev/module.hpp"
#include "malcev/report.hpp"
#include "malcev/scalar.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace malcev {

/// Malformed or inconsistent bundle document; the message names the offending field.
class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Self-describing document for an algebra and optional attached data: a form, an
/// involution, an embedding of the 7-dimensional algebra, or a module action of the
/// algebra described by another bundle.
struct AlgebraBundle {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<int> parity;  // empty when ungraded
  std::map<std::array<std::size_t, 3>, Scalar> table;  // (i, j, k) -> c_ij^k, nonzero only
  bool has_table = false;
  std::optional<Scalar> gamma;
  std::optional<std::string> variant;
  std::optional<Matrix> form;
  std::optional<Matrix> involution;
  std::optional<std::vector<Vector>> embedding;
  std::optional<std::map<std::array<std::size_t, 3>, Scalar>> action;  // (x, row, col)

  Algebra algebra() const {
    if (!has_table) throw BundleError("bundle has no multiplication table");
    Algebra a(labels, parity);
    for (const auto& [idx, c] : table) a.add_product_term(idx[0], idx[1], idx[2], c);
    return a;
  }

  M7Variant m7_variant() const {
    if (!variant || *variant == "split") return M7Variant::split();
    return M7Variant::division(gamma.value_or(Scalar(-1)));
  }

  Embedding embedding_data() const {
    if (!embedding) throw BundleError("bundle has no embedding");
    return {m7_variant(), *embedding};
  }

  BilinearForm form_data() const {
    if (!form) throw BundleError("bundle has no form");
    return {*form};
  }

  InvolutionMap involution_data() const {
    if (!involution) throw BundleError("bundle has no involution");
    return {*involution};
  }

  /// Module action over the given acting algebra, carrier = this bundle's space.
  Representation representation(const Algebra& acting) const {
    if (!action) throw BundleError("bundle has no action");
    Representation r;
    r.acting = acting;
    r.carrier_parity = parity.empty() ? std::vector<int>(dim, 0) : parity;
    r.carrier_labels = labels;
    for (std::size_t x = 0; x < acting.dim(); ++x) r.action.push_back({Matrix(dim, dim), acting.parity(x)});
    for (const auto& [idx, c] : *action) {
      if (idx[0] >= acting.dim()) throw BundleError("action: acting index " + std::to_string(idx[0]) + " out of range");
      r.action[idx[0]].matrix(idx[1], idx[2]) = c;
    }
    return r;
  }

  static AlgebraBundle from_algebra(const Algebra& a) {
    AlgebraBundle b;
    b.dim = a.dim();
    b.labels = a.labels();
    if (a.is_graded()) b.parity = a.parities();
    b.has_table = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& [k, c] : a.product(i, j).terms()) b.table[{i, j, k}] = c;
    return b;
  }

  static AlgebraBundle from_representation(const Representation& r) {
    AlgebraBundle b;
    b.dim = r.carrier_dim();
    for (std::size_t i = 0; i < b.dim; ++i) b.labels.push_back(r.carrier_label(i));
    if (std::any_of(r.carrier_parity.begin(), r.carrier_parity.end(), [](int p) { return p; })) b.parity = r.carrier_parity;
    b.action.emplace();
    for (std::size_t x = 0; x < r.action.size(); ++x)
      for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
          if (!is_zero(r.action[x].matrix(i, j))) (*b.action)[{x, i, j}] = r.action[x].matrix(i, j);
    return b;
  }

  static AlgebraBundle from_embedding(std::size_t host_dim, const Embedding& e) {
    AlgebraBundle b;
    b.dim = host_dim;
    for (std::size_t i = 0; i < host_dim; ++i) b.labels.push_back("b" + std::to_string(i));
    b.variant = e.variant.name();
    if (e.variant.kind == M7Variant::Kind::division) b.gamma = e.variant.gamma;
    b.embedding = e.images;
    return b;
  }
};

namespace detail {

using json = nlohmann::json;

inline Scalar scalar_field(const json& v, const std::string& path) {
  if (!v.is_string()) throw BundleError(path + ": coefficient must be a string like \"p/q\"");
  auto s = try_parse_scalar(v.get<std::string>());
  if (!s) throw BundleError(path + ": '" + v.get<std::string>() + "' is not an exact rational literal");
  return *s;
}

inline std::size_t index_field(const json& v, const std::string& path, std::size_t bound) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw BundleError(path + ": index must be a non-negative integer");
  auto i = v.get<std::size_t>();
  if (i >= bound) throw BundleError(path + ": index " + std::to_string(i) + " out of range (dim " + std::to_string(bound) + ")");
  return i;
}

inline std::map<std::array<std::size_t, 3>, Scalar> triples(const json& arr, const std::string& name,
                                                            std::array<std::size_t, 3> bounds) {
  if (!arr.is_array()) throw BundleError(name + ": must be an array");
  std::map<std::array<std::size_t, 3>, Scalar> out;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string path = name + "[" + std::to_string(e) + "]";
    const auto& entry = arr[e];
    if (!entry.is_array() || entry.size() != 4) throw BundleError(path + ": entry must be [i, j, k, \"coefficient\"]");
    std::array<std::size_t, 3> idx{};
    for (std::size_t s = 0; s < 3; ++s) idx[s] = index_field(entry[s], path + "[" + std::to_string(s) + "]", bounds[s]);
    Scalar c = scalar_field(entry[3], path + "[3]");
    if (out.count(idx)) throw BundleError(path + ": duplicate entry");
    if (!is_zero(c)) out.emplace(idx, c);
  }
  return out;
}

inline Matrix sparse_matrix(const json& arr, const std::string& name, std::size_t n) {
  if (!arr.is_array()) throw BundleError(name + ": must be an array");
  Matrix m(n, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string path = name + "[" + std::to_string(e) + "]";
    const auto& entry = arr[e];
    if (!entry.is_array() || entry.size() != 3) throw BundleError(path + ": entry must be [row, col, \"coefficient\"]");
    std::size_t r = index_field(entry[0], path + "[0]", n), c = index_field(entry[1], path + "[1]", n);
    if (!seen.insert({r, c}).second) throw BundleError(path + ": duplicate entry");
    m(r, c) = scalar_field(entry[2], path + "[2]");
  }
  return m;
}

inline std::string quoted(const std::string& s) { return json(s).dump(); }

inline std::string sparse_matrix_json(const Matrix& m) {
  std::string out = "[";
  bool first = true;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) {
        out += first ? "\n    " : ",\n    ";
        out += "[" + std::to_string(r) + ", " + std::to_string(c) + ", " + quoted(to_string(m(r, c))) + "]";
        first = false;
      }
  return out + (first ? "]" : "\n  ]");
}

inline std::string triples_json(const std::map<std::array<std::size_t, 3>, Scalar>& t) {
  std::string out = "[";
  bool first = true;
  for (const auto& [idx, c] : t) {
    out += first ? "\n    " : ",\n    ";
    out += "[" + std::to_string(idx[0]) + ", " + std::to_string(idx[1]) + ", " + std::to_string(idx[2]) + ", " +
           quoted(to_string(c)) + "]";
    first = false;
  }
  return out + (first ? "]" : "\n  ]");
}

}  // namespace detail

inline AlgebraBundle parse_bundle(const std::string& text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw BundleError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw BundleError("document must be an object");
  static const std::set<std::string> known{"dim", "labels", "parity", "table", "gamma", "variant",
                                           "form", "involution", "embedding", "action"};
  for (const auto& [k, v] : doc.items())
    if (!known.count(k)) throw BundleError(k + ": unknown field");
  AlgebraBundle b;
  if (!doc.contains("dim")) throw BundleError("dim: missing");
  b.dim = detail::index_field(doc["dim"], "dim", std::numeric_limits<std::size_t>::max());
  if (b.dim == 0) throw BundleError("dim: must be positive");
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != b.dim) throw BundleError("labels: must be an array of dim strings");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.dim; ++i) {
      if (!l[i].is_string()) throw BundleError("labels[" + std::to_string(i) + "]: must be a string");
      if (!seen.insert(l[i].get<std::string>()).second) throw BundleError("labels[" + std::to_string(i) + "]: duplicate label");
      b.labels.push_back(l[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < b.dim; ++i) b.labels.push_back("b" + std::to_string(i));
  }
  if (doc.contains("parity")) {
    const auto& p = doc["parity"];
    if (!p.is_array() || p.size() != b.dim) throw BundleError("parity: must be an array of dim bits");
    for (std::size_t i = 0; i < b.dim; ++i) {
      if (!p[i].is_number_integer() || (p[i].get<int>() != 0 && p[i].get<int>() != 1))
        throw BundleError("parity[" + std::to_string(i) + "]: must be 0 or 1");
      b.parity.push_back(p[i].get<int>());
    }
    if (std::none_of(b.parity.begin(), b.parity.end(), [](int x) { return x; })) b.parity.clear();
  }
  if (doc.contains("table")) {
    b.has_table = true;
    b.table = detail::triples(doc["table"], "table", {b.dim, b.dim, b.dim});
    const std::vector<int> par = b.parity.empty() ? std::vector<int>(b.dim, 0) : b.parity;
    for (const auto& [idx, c] : b.table)
      if (par[idx[2]] != ((par[idx[0]] + par[idx[1]]) & 1))
        throw BundleError("table: entry (" + std::to_string(idx[0]) + ", " + std::to_string(idx[1]) + ", " +
                          std::to_string(idx[2]) + ") breaks the grading");
  }
  if (doc.contains("gamma")) {
    b.gamma = detail::scalar_field(doc["gamma"], "gamma");
    if (is_zero(*b.gamma)) throw BundleError("gamma: must be nonzero");
  }
  if (doc.contains("variant")) {
    if (!doc["variant"].is_string() || (doc["variant"] != "split" && doc["variant"] != "division"))
      throw BundleError("variant: must be \"split\" or \"division\"");
    b.variant = doc["variant"].get<std::string>();
  }
  if (doc.contains("form")) b.form = detail::sparse_matrix(doc["form"], "form", b.dim);
  if (doc.contains("involution")) b.involution = detail::sparse_matrix(doc["involution"], "involution", b.dim);
  if (doc.contains("embedding")) {
    const auto& e = doc["embedding"];
    if (!e.is_array() || e.size() != 7) throw BundleError("embedding: must be an array of 7 coefficient rows");
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < 7; ++r) {
      const std::string path = "embedding[" + std::to_string(r) + "]";
      if (!e[r].is_array() || e[r].size() != b.dim) throw BundleError(path + ": must hold dim coefficients");
      Vector v;
      for (std::size_t c = 0; c < b.dim; ++c) v.push_back(detail::scalar_field(e[r][c], path + "[" + std::to_string(c) + "]"));
      rows.push_back(std::move(v));
    }
    b.embedding = std::move(rows);
  }
  if (doc.contains("action")) {
    b.action = detail::triples(doc["action"], "action", {std::numeric_limits<std::size_t>::max(), b.dim, b.dim});
  }
  return b;
}

inline AlgebraBundle read_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BundleError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_bundle(ss.str());
  } catch (const BundleError& e) {
    throw BundleError(path + ": " + e.what());
  }
}

/// Canonical text: fixed key order, entries sorted, reduced fractions, one entry per line.
inline std::string serialize_bundle(const AlgebraBundle& b) {
  using detail::json;
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("dim", std::to_string(b.dim));
  fields.emplace_back("labels", json(b.labels).dump());
  if (!b.parity.empty() && std::any_of(b.parity.begin(), b.parity.end(), [](int p) { return p; }))
    fields.emplace_back("parity", json(b.parity).dump());
  if (b.has_table) fields.emplace_back("table", detail::triples_json(b.table));
  if (b.variant) fields.emplace_back("variant", detail::quoted(*b.variant));
  if (b.gamma) fields.emplace_back("gamma", detail::quoted(to_string(*b.gamma)));
  if (b.form) fields.emplace_back("form", detail::sparse_matrix_json(*b.form));
  if (b.involution) fields.emplace_back("involution", detail::sparse_matrix_json(*b.involution));
  if (b.embedding) {
    std::string e = "[";
    for (std::size_t r = 0; r < b.embedding->size(); ++r) {
      e += r ? ",\n    " : "\n    ";
      json row = json::array();
      for (const auto& c : (*b.embedding)[r]) row.push_back(to_string(c));
      e += row.dump();
    }
    fields.emplace_back("embedding", e + "\n  ]");
  }
  if (b.action) fields.emplace_back("action", detail::triples_json(*b.action));
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i)
    out += "  " + detail::quoted(fields[i].first) + ": " + fields[i].second + (i + 1 < fields.size() ? ",\n" : "\n");
  return out + "}\n";
}

inline void write_bundle(const AlgebraBundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BundleError(path + ": cannot write");
  out << serialize_bundle(b);
}

}  // namespace malcev

#endif  // MALCEV_BUNDLE_HPP
