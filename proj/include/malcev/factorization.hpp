#ifndef MALCEV_FACTORIZATION_HPP
#define MALCEV_FACTORIZATION_HPP

#include "malcev/algebra.hpp"
#include "malcev/cayley_dickson.hpp"
#include "malcev/identities.hpp"
#include "malcev/linalg.hpp"
#include "malcev/module.hpp"
#include "malcev/report.hpp"
#include "malcev/structure.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

/// Images in a host algebra of the basis of one model of the 7-dimensional algebra.
struct Embedding {
  M7Variant variant;
  std::vector<Vector> images;

  Algebra source() const { return build_m7(variant); }

  static Embedding identity(const M7Variant& v = M7Variant::split()) {
    Embedding e{v, {}};
    for (std::size_t i = 0; i < 7; ++i) e.images.push_back(unit_vector(7, i));
    return e;
  }

  /// a -> a (x) 1 into tensor_with_coordinates(source, U).
  static Embedding canonical(const M7Variant& v, const Algebra& u) { return {v, canonical_tensor_embedding(7, u)}; }
};

/// Independence, evenness and all 49 table products of the images.
inline Report verify_embedding(const Algebra& host, const Embedding& iota) {
  Report r = Report::pass("embedding");
  ScopedTimer timer(r);
  const Algebra src = iota.source();
  auto fail = [&](Witness w, std::string detail) {
    r.status = Status::fail;
    r.witness = std::move(w);
    r.detail = std::move(detail);
    return r;
  };
  if (iota.images.size() != src.dim()) return fail(Witness{}, "expected 7 images");
  for (std::size_t a = 0; a < src.dim(); ++a) {
    if (iota.images[a].size() != host.dim()) return fail(Witness{{a}, {src.label(a)}, {}}, "image has the wrong length");
    if (!is_zero(host.component(iota.images[a], 1)))
      return fail(Witness{{a}, {src.label(a)}, {iota.images[a]}}, "image is not even");
  }
  if (rank(Matrix::from_rows(iota.images, host.dim())) != src.dim())
    return fail(Witness{}, "images are linearly dependent");
  for (std::size_t a = 0; a < src.dim(); ++a)
    for (std::size_t b = 0; b < src.dim(); ++b) {
      ++r.cases;
      Vector lhs = host.mul(iota.images[a], iota.images[b]);
      Vector rhs = zero_vector(host.dim());
      for (const auto& [k, c] : src.product(a, b).terms()) rhs = rhs + c * iota.images[k];
      if (lhs != rhs)
        return fail(Witness{{a, b}, {src.label(a), src.label(b)}, {lhs, rhs}},
                    "product " + src.label(a) + "*" + src.label(b) + " is not preserved");
    }
  return r;
}

/// No nonzero m with m . iota(a) = 0 for every a (graded: witness is homogeneous).
inline Report check_annihilator_hypothesis(const Algebra& host, const Embedding& iota) {
  Report r = Report::pass("annihilator-hypothesis");
  ScopedTimer timer(r);
  const std::size_t n = host.dim();
  std::vector<Vector> rows;
  for (const auto& img : iota.images) {
    Matrix rm = host.right_mult(img);
    for (std::size_t k = 0; k < n; ++k) rows.push_back(rm.row(k));
  }
  r.cases = n;
  auto kernel = nullspace(Matrix::from_rows(rows, n));
  if (!kernel.empty()) {
    Vector z = kernel.front();
    if (host.is_graded() && !host.homogeneous_parity(z)) z = is_zero(host.component(z, 0)) ? host.component(z, 1) : host.component(z, 0);
    Witness w;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(z[i])) {
        w.indices.push_back(i);
        w.labels.push_back(host.label(i));
      }
    w.vectors = {z};
    r.status = Status::fail;
    r.witness = w;
    r.detail = "nonzero element annihilates the embedded algebra";
  }
  return r;
}

struct FactorizationResult {
  Algebra coordinates;                       // U on the operator basis, identity first
  std::vector<OperatorMatrix> operator_basis;
  std::vector<std::array<std::size_t, 3>> witnesses;  // (v, a, b) per operator; identity has none
  Matrix iso;                                // columns: iota(a) u_k at index a * dim U + k
  Algebra tensor;                            // source (x) U, domain of iso
  std::vector<Report> checks;
};

namespace detail {

inline Witness pair_witness(std::size_t i, std::size_t j, std::vector<Vector> vectors = {}) {
  Witness w;
  w.indices = {i, j};
  w.labels = {"u" + std::to_string(i), "u" + std::to_string(j)};
  w.vectors = std::move(vectors);
  return w;
}

}  // namespace detail

/// M = source (x) U: U is spanned by the identity and the operators alpha(v, iota(a),
/// iota(b)); every step of the identification is verified and any violation raised with
/// its witness.
inline FactorizationResult kronecker_factorize(const Algebra& host, const Embedding& iota, bool check_malcev = true) {
  const std::size_t n = host.dim();
  FactorizationResult out;
  {
    Report e = verify_embedding(host, iota);
    if (!e.passed())
      throw MalcevError(ErrorKind::hypothesis_violated, "embedding: " + e.detail, e.witness.value_or(Witness{}));
    out.checks.push_back(e);
    Report h = check_annihilator_hypothesis(host, iota);
    if (!h.passed())
      throw MalcevError(ErrorKind::hypothesis_violated, "annihilator: " + h.detail, h.witness.value_or(Witness{}));
    out.checks.push_back(h);
    if (check_malcev) {
      Report m = verify_malcev(host);
      if (!m.passed())
        throw MalcevError(ErrorKind::hypothesis_violated, "host is not a Malcev (super)algebra",
                          m.witness.value_or(Witness{}));
      out.checks.push_back(m);
    }
  }
  const Algebra src = iota.source();
  const std::size_t d = src.dim();

  // (1) operator space, identity first, then independent alpha's in witness order
  Span span(n * n);
  span.add(Matrix::identity(n).data());
  out.operator_basis.push_back(OperatorMatrix::identity(n));
  out.witnesses.push_back({n, d, d});
  std::vector<SVec> img;
  for (const auto& v : iota.images) img.push_back(SVec::from_dense(v));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        OperatorMatrix op = alpha_operator(host, SVec::basis(v), img[a], img[b]);
        if (op.is_zero()) continue;
        if (span.add(op.matrix.data())) {
          out.operator_basis.push_back(std::move(op));
          out.witnesses.push_back({v, a, b});
        }
      }
  const std::size_t m = out.operator_basis.size();

  // (2) centroid membership
  Report cent = Report::pass("centroid-membership");
  for (std::size_t k = 0; k < m; ++k) {
    Report c = check_centroid_member(host, out.operator_basis[k]);
    cent.cases += c.cases;
    if (!c.passed()) {
      Witness w = c.witness.value_or(Witness{});
      w.indices.insert(w.indices.begin(), k);
      throw MalcevError(ErrorKind::centroid_violation, "operator u" + std::to_string(k) + " is not in the centroid", w);
    }
  }
  out.checks.push_back(cent);

  // (3) closure and supercommutativity; structure constants of U
  std::vector<std::string> labels{"1"};
  std::vector<int> parity{0};
  for (std::size_t k = 1; k < m; ++k) {
    labels.push_back("u" + std::to_string(k));
    parity.push_back(out.operator_basis[k].parity);
  }
  Algebra u(labels, parity);
  Report closure = Report::pass("closure");
  Report comm = Report::pass("supercommutative");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ++closure.cases;
      ++comm.cases;
      const auto& x = out.operator_basis[i];
      const auto& y = out.operator_basis[j];
      OperatorMatrix xy = then(x, y);
      auto coords = span.coordinates(xy.matrix.data());
      if (!coords) throw MalcevError(ErrorKind::not_closed, "composition leaves the operator space", detail::pair_witness(i, j));
      OperatorMatrix yx = then(y, x);
      if (xy.matrix != Scalar(sign_of(x.parity * y.parity)) * yx.matrix)
        throw MalcevError(ErrorKind::not_supercommutative, "operators do not supercommute", detail::pair_witness(i, j));
      u.set_product(i, j, *coords);
    }
  out.checks.push_back(closure);
  out.checks.push_back(comm);
  {
    Report assoc = check_associative(u);
    if (!assoc.passed())
      throw MalcevError(ErrorKind::not_closed, "recovered table is not associative", assoc.witness.value_or(Witness{}));
    out.checks.push_back(assoc);
  }

  // (4) dimension and bijectivity of (a, u) -> iota(a) u
  if (n != d * m)
    throw MalcevError(ErrorKind::dimension_mismatch, "dim M = " + std::to_string(n) + " but 7 * dim U = " +
                                                         std::to_string(d * m));
  out.iso = Matrix(n, n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < m; ++k) out.iso.set_column(a * m + k, out.operator_basis[k].apply(iota.images[a]));
  if (rank(out.iso) != n) throw MalcevError(ErrorKind::iso_check_failed, "the map source (x) U -> M is not bijective");

  // (5) homomorphism on all basis pairs
  out.coordinates = std::move(u);
  out.tensor = tensor_with_coordinates(src, out.coordinates);
  Report hom = Report::pass("isomorphism");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++hom.cases;
      Vector lhs = out.iso * out.tensor.product(i, j).to_dense(n);
      Vector rhs = host.mul(out.iso.column(i), out.iso.column(j));
      if (lhs != rhs) {
        Witness w;
        w.indices = {i, j};
        w.labels = {out.tensor.label(i), out.tensor.label(j)};
        w.vectors = {lhs, rhs};
        throw MalcevError(ErrorKind::iso_check_failed, "map is not multiplicative", w);
      }
    }
  out.checks.push_back(hom);
  return out;
}

/// (a alpha)(b beta) = (-1)^{|alpha||b|} (ab)(alpha beta) for all basis pairs of the
/// embedded algebra and all operator pairs.
inline Report check_mixed_identity(const Algebra& host, const Embedding& iota, const std::vector<OperatorMatrix>& ops) {
  Report r = Report::pass("mixed-identity");
  const Algebra src = iota.source();
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < ops.size(); ++j)
      for (std::size_t a = 0; a < src.dim(); ++a)
        for (std::size_t b = 0; b < src.dim(); ++b) {
          ++r.cases;
          Vector lhs = host.mul(ops[i].apply(iota.images[a]), ops[j].apply(iota.images[b]));
          Vector ab = zero_vector(host.dim());
          for (const auto& [k, c] : src.product(a, b).terms()) ab = ab + c * iota.images[k];
          Vector rhs = then(ops[i], ops[j]).apply(ab);
          if (lhs != rhs) {
            Witness w;
            w.indices = {i, j, a, b};
            w.vectors = {lhs, rhs};
            return Report::fail("mixed-identity", w);
          }
        }
  return r;
}

/// Reads each recovered operator as the coordinate element it multiplies by, when the
/// host is source (x) expected with the canonical embedding: row k of the result holds
/// the coordinates of u_k over the basis of expected.
inline Matrix coordinate_readout(const FactorizationResult& res, const Algebra& expected) {
  const std::size_t m = expected.dim();
  Matrix r(res.operator_basis.size(), m);
  const std::size_t n = res.operator_basis.front().dim();
  Vector first = zero_vector(n);  // source basis vector 0 tensored with the unit
  auto unit = find_unit(expected);
  if (!unit) throw MalcevError(ErrorKind::invalid_input, "expected coordinate algebra has no unit");
  for (std::size_t k = 0; k < m; ++k) first[k] = (*unit)[k];
  for (std::size_t i = 0; i < res.operator_basis.size(); ++i) {
    Vector image = res.operator_basis[i].apply(first);
    for (std::size_t k = 0; k < m; ++k) r(i, k) = image[k];
  }
  return r;
}

/// Recovered U agrees with the expected one: the readout is a bijective, parity
/// preserving algebra map, and the recovered table rewritten in the expected basis
/// equals the expected table entry by entry.
inline Report compare_coordinates(const FactorizationResult& res, const Algebra& expected) {
  Report r = Report::pass("coordinate-roundtrip");
  const Algebra& u = res.coordinates;
  const std::size_t m = expected.dim();
  if (u.dim() != m) return Report::fail("coordinate-roundtrip", Witness{}, "dimension " + std::to_string(u.dim()) + " != " + std::to_string(m));
  Matrix readout = coordinate_readout(res, expected);
  auto inv = inverse(readout);
  if (!inv) return Report::fail("coordinate-roundtrip", Witness{}, "readout is not invertible");
  for (std::size_t i = 0; i < m; ++i) {
    auto p = expected.homogeneous_parity(readout.row(i));
    if (!p || *p != u.parity(i))
      return Report::fail("coordinate-roundtrip", Witness{{i}, {u.label(i)}, {readout.row(i)}}, "parity mismatch");
  }
  // R^T maps recovered coordinates to expected coordinates
  Matrix to_expected = readout.transpose();
  Matrix to_recovered = *inv;
  to_recovered = to_recovered.transpose();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ++r.cases;
      // expected table rewritten: f_i f_j in the recovered basis, f = expected basis
      Vector fi = to_recovered * unit_vector(m, i), fj = to_recovered * unit_vector(m, j);
      Vector prod_recovered = to_expected * u.mul(fi, fj);
      Vector prod_expected = expected.product(i, j).to_dense(m);
      if (prod_recovered != prod_expected)
        return Report::fail("coordinate-roundtrip", Witness{{i, j}, {expected.label(i), expected.label(j)}, {prod_recovered, prod_expected}},
                            "tables differ");
    }
  return r;
}

/// Result of the coordinatization: M7(U) acting on V = M7(W) inside M7(U + W).
struct CoordinatizedModule {
  Representation rep;  // acting: M7(U), carrier: e_i (x) w_l, i-major
  Algebra m7_total;    // M7(E), E = U + W
  std::vector<std::size_t> base_indices, module_indices;  // positions of M7(U), V inside M7(E)
  Report containment;
};

/// Split null extension E = U + W of a unital commutative associative algebra by a
/// module W: (u + w)(u' + w') = uu' + w.u' + w'.u.
inline Algebra associative_null_extension(const Algebra& u, const Representation& w) {
  const std::size_t du = u.dim(), dw = w.carrier_dim();
  std::vector<std::string> labels = u.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::size_t l = 0; l < dw; ++l) {
    std::string s = w.carrier_label(l);
    while (used.count(s)) s += "'";
    used.insert(s);
    labels.push_back(s);
  }
  Algebra e(labels);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < du; ++j) e.set_product(i, j, u.product(i, j));
  for (std::size_t l = 0; l < dw; ++l)
    for (std::size_t i = 0; i < du; ++i) {
      Vector col = zero_vector(du + dw);
      for (std::size_t r = 0; r < dw; ++r) col[du + r] = w.action[i].matrix(r, l);
      e.set_product(du + l, i, col);
      e.set_product(i, du + l, col);
    }
  return e;
}

/// The M7(U)-module T(W).
inline CoordinatizedModule coordinatize_module(const Algebra& u, const Representation& w) {
  if (u.is_graded()) throw MalcevError(ErrorKind::invalid_input, "coordinatization expects an ungraded coordinate algebra");
  detail::require_coordinate_algebra(u);
  w.validate();
  if (!w.acting.same_structure(u)) throw MalcevError(ErrorKind::invalid_input, "module acts for a different algebra");
  if (std::any_of(w.carrier_parity.begin(), w.carrier_parity.end(), [](int p) { return p; }))
    throw MalcevError(ErrorKind::invalid_input, "coordinatization expects an ungraded module");
  const std::size_t du = u.dim(), dw = w.carrier_dim();
  // unital, associative, wU != 0
  auto unit = find_unit(u);
  if (!unit) throw MalcevError(ErrorKind::invalid_input, "coordinate algebra has no unit");
  if (w.operator_of(*unit) != Matrix::identity(dw))
    throw MalcevError(ErrorKind::hypothesis_violated, "unit does not act as the identity");
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < du; ++j)
      if (w.action[j].matrix * w.action[i].matrix != w.operator_of(u.product(i, j).to_dense(du)))
        throw MalcevError(ErrorKind::hypothesis_violated, "module action is not associative", detail::pair_witness(i, j));
  if (!annihilated_vectors(w).empty())
    throw MalcevError(ErrorKind::hypothesis_violated, "a nonzero module element is annihilated by U");

  const Algebra e = associative_null_extension(u, w);
  CoordinatizedModule out;
  out.m7_total = build_m7_over(e);
  const std::size_t de = du + dw;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t k = 0; k < du; ++k) out.base_indices.push_back(i * de + k);
    for (std::size_t l = 0; l < dw; ++l) out.module_indices.push_back(i * de + du + l);
  }
  const Algebra base = build_m7_over(u);
  const std::size_t nb = base.dim(), nv = out.module_indices.size();
  out.rep.acting = base;
  out.rep.carrier_parity.assign(nv, 0);
  for (auto idx : out.module_indices) out.rep.carrier_labels.push_back(out.m7_total.label(idx));
  for (std::size_t x = 0; x < nb; ++x) {
    Matrix m(nv, nv);
    for (std::size_t v = 0; v < nv; ++v) {
      const SVec& p = out.m7_total.product(out.module_indices[v], out.base_indices[x]);
      for (std::size_t r = 0; r < nv; ++r) m(r, v) = p.coeff(out.module_indices[r]);
    }
    out.rep.action.push_back({m, 0});
  }
  // M7(E) is the split null extension of M7(U) by V
  Report c = Report::pass("containment");
  std::vector<std::size_t> order = out.base_indices;
  order.insert(order.end(), out.module_indices.begin(), out.module_indices.end());
  Algebra reordered = permuted(out.m7_total, order);
  SplitExtension ext = split_null_extension(base, out.rep);
  c.cases = reordered.dim() * reordered.dim();
  for (std::size_t i = 0; i < reordered.dim(); ++i)
    for (std::size_t j = 0; j < reordered.dim(); ++j)
      if (reordered.product(i, j) != ext.total.product(i, j)) {
        Witness wit;
        wit.indices = {i, j};
        wit.vectors = {reordered.product(i, j).to_dense(reordered.dim()), ext.total.product(i, j).to_dense(reordered.dim())};
        c = Report::fail("containment", wit, "M7(E) differs from the split null extension");
        i = reordered.dim();
        break;
      }
  out.containment = c;
  return out;
}

}  // namespace malcev

#endif  // MALCEV_FACTORIZATION_HPP
