#ifndef MALCEV_INVOLUTION_HPP
#define MALCEV_INVOLUTION_HPP

#include "malcev/algebra.hpp"
#include "malcev/cayley_dickson.hpp"
#include "malcev/factorization.hpp"
#include "malcev/identities.hpp"
#include "malcev/linalg.hpp"
#include "malcev/report.hpp"
#include "malcev/structure.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

/// f(x, y) = x^T G y on coordinate vectors.
struct BilinearForm {
  Matrix gram;

  std::size_t dim() const { return gram.rows(); }

  Scalar operator()(const Vector& x, const Vector& y) const {
    Vector gy = gram * y;
    Scalar s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
  }

  bool is_symmetric() const { return gram == gram.transpose(); }
  bool is_nonsingular() const { return rank(gram) == dim(); }
};

/// Even linear map; applied to coordinate columns.
struct InvolutionMap {
  Matrix matrix;

  Vector apply(const Vector& x) const { return matrix * x; }

  static InvolutionMap minus_identity(std::size_t n) { return {Scalar(-1) * Matrix::identity(n)}; }
};

/// sigma^2 = id, sigma even, and (ab)* = (-1)^{|a||b|} b* a* on basis pairs.
inline Report verify_involution(const Algebra& a, const InvolutionMap& sigma) {
  Report r = Report::pass("involution");
  ScopedTimer timer(r);
  const std::size_t n = a.dim();
  if (sigma.matrix.rows() != n || sigma.matrix.cols() != n)
    return Report::fail("involution", Witness{}, "matrix has the wrong size");
  if (!respects_grading(OperatorMatrix{sigma.matrix, 0}, a.parities()))
    return Report::fail("involution", Witness{}, "map is not even");
  Matrix sq = sigma.matrix * sigma.matrix;
  for (std::size_t c = 0; c < n; ++c)
    if (sq.column(c) != unit_vector(n, c))
      return Report::fail("involution", Witness{{c}, {a.label(c)}, {sq.column(c)}}, "map does not square to the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++r.cases;
      Vector lhs = sigma.apply(a.product(i, j).to_dense(n));
      Vector rhs = Scalar(sign_of(a.parity(i) * a.parity(j))) * a.mul(sigma.matrix.column(j), sigma.matrix.column(i));
      if (lhs != rhs) {
        Witness w{{i, j}, {a.label(i), a.label(j)}, {lhs, rhs}};
        return Report::fail("involution", w, "(ab)* differs from the signed b*a*");
      }
    }
  return r;
}

/// f(x, y) = identity coefficient of (-x)(y) for lifts of x, y into the 8-dimensional
/// composition algebra; the opposite of the scalar part of the product.
inline BilinearForm canonical_form_m7(const M7Variant& variant = M7Variant::split()) {
  const Algebra c = variant.kind == M7Variant::Kind::split ? build_cayley_matrix_algebra(field_algebra())
                                                            : build_division_octonions(variant.gamma);
  BilinearForm f{Matrix(7, 7)};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) f.gram(i, j) = -c.product(i + 1, j + 1).coeff(0);
  return f;
}

/// Unique alpha* with f(x alpha, y) = (-1)^{|alpha||y|} f(x, y alpha*).
inline OperatorMatrix adjoint_operator(const OperatorMatrix& alpha, const BilinearForm& f,
                                       const std::vector<int>& parity = {}) {
  auto ginv = inverse(f.gram);
  if (!ginv) throw MalcevError(ErrorKind::singular_form, "form is singular");
  Matrix m = *ginv * alpha.matrix.transpose() * f.gram;
  if (alpha.parity && !parity.empty())
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (parity[c])
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
  return {m, alpha.parity};
}

/// Defining equation of the adjoint on all basis pairs.
inline Report check_adjoint(const OperatorMatrix& alpha, const OperatorMatrix& adj, const BilinearForm& f,
                            const std::vector<int>& parity = {}) {
  Report r = Report::pass("adjoint");
  const std::size_t n = f.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ++r.cases;
      const int py = parity.empty() ? 0 : parity[y];
      Scalar lhs = f(alpha.apply(unit_vector(n, x)), unit_vector(n, y));
      Scalar rhs = Scalar(sign_of(alpha.parity * py)) * f(unit_vector(n, x), adj.apply(unit_vector(n, y)));
      if (lhs != rhs) return Report::fail("adjoint", Witness{{x, y}, {}, {{lhs}, {rhs}}});
    }
  return r;
}

/// Symmetric elements {a : a* = a} must lie in the nucleus.
inline Report j_admissibility(const Algebra& e, const InvolutionMap& sigma) {
  Report r = Report::pass("j-admissible");
  ScopedTimer timer(r);
  const std::size_t n = e.dim();
  std::vector<Vector> sym = nullspace(sigma.matrix - Matrix::identity(n));
  if (sym.empty()) {
    r.detail = "no nonzero symmetric elements";
    return r;
  }
  Span nuc(n);
  for (const auto& v : nucleus(e)) nuc.add(v);
  for (std::size_t s = 0; s < sym.size(); ++s) {
    ++r.cases;
    if (nuc.contains(sym[s])) continue;
    SVec sv = SVec::from_dense(sym[s]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int slot = 0; slot < 3; ++slot) {
          SVec ei = SVec::basis(i), ej = SVec::basis(j);
          SVec d = slot == 0 ? associator(e, sv, ei, ej) : slot == 1 ? associator(e, ei, sv, ej) : associator(e, ei, ej, sv);
          if (d.is_zero()) continue;
          Witness w;
          w.indices = {static_cast<std::size_t>(slot), i, j};
          w.labels = {slot == 0 ? "(s,x,y)" : slot == 1 ? "(x,s,y)" : "(x,y,s)", e.label(i), e.label(j)};
          w.vectors = {sym[s], d.to_dense(n)};
          return Report::fail("j-admissible", w, "symmetric element outside the nucleus");
        }
  }
  return r;
}

struct SymSkew {
  std::vector<OperatorMatrix> sym, skew;
};

/// Splits a *-invariant operator space into alpha + alpha* and alpha - alpha* parts.
inline SymSkew sym_skew_split(const std::vector<OperatorMatrix>& ops, const BilinearForm& f,
                              const std::vector<int>& parity = {}) {
  const std::size_t n = f.dim();
  Span space(n * n);
  for (const auto& op : ops) space.add(op.matrix.data());
  std::vector<OperatorMatrix> adj;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    adj.push_back(adjoint_operator(ops[k], f, parity));
    if (!space.contains(adj.back().matrix.data())) {
      Witness w;
      w.indices = {k};
      throw MalcevError(ErrorKind::not_invariant, "adjoint leaves the operator space", w);
    }
  }
  SymSkew out;
  Span sym(n * n), skew(n * n);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    Matrix s = Scalar(1, 2) * (ops[k].matrix + adj[k].matrix);
    Matrix t = Scalar(1, 2) * (ops[k].matrix - adj[k].matrix);
    if (sym.add(s.data())) out.sym.push_back({s, ops[k].parity});
    if (skew.add(t.data())) out.skew.push_back({t, ops[k].parity});
  }
  return out;
}

/// tau(u) = coordinate functional making (u, w) -> tau(uw) non-singular: the identity
/// coefficient first, then each basis coefficient in order, then the sum of all
/// coefficients. Returns the functional as a vector.
inline Vector frobenius_functional(const Algebra& u) {
  const std::size_t m = u.dim();
  auto unit = find_unit(u);
  std::vector<Vector> candidates;
  if (unit) {
    // coefficient of the identity: functional dual to the unit within the basis
    std::size_t idx = 0;
    while (idx < m && is_zero((*unit)[idx])) ++idx;
    candidates.push_back(unit_vector(m, idx));
  }
  for (std::size_t k = 0; k < m; ++k) candidates.push_back(unit_vector(m, k));
  candidates.push_back(Vector(m, Scalar(1)));
  for (const auto& tau : candidates) {
    Matrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Scalar s = 0;
        for (const auto& [k, c] : u.product(i, j).terms()) s += c * tau[k];
        g(i, j) = s;
      }
    if (rank(g) == m && g == g.transpose()) return tau;
  }
  throw MalcevError(ErrorKind::singular_form, "no coordinate functional gives a non-singular symmetric pairing");
}

/// f(a (x) u, b (x) w) = f0(a, b) tau(uw) on the A-major tensor basis.
inline BilinearForm induced_form(const BilinearForm& f0, const Algebra& u) {
  const Vector tau = frobenius_functional(u);
  const std::size_t d = f0.dim(), m = u.dim();
  BilinearForm f{Matrix(d * m, d * m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Scalar t = 0;
      for (const auto& [k, c] : u.product(i, j).terms()) t += c * tau[k];
      if (is_zero(t)) continue;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) f.gram(a * m + i, b * m + j) = f0.gram(a, b) * t;
    }
  return f;
}

/// (a (x) u)* = a* (x) u with a* = -a.
inline InvolutionMap induced_involution(std::size_t source_dim, const Algebra& u) {
  return InvolutionMap::minus_identity(source_dim * u.dim());
}

struct InvolutiveFactorization {
  FactorizationResult factorization;
  std::vector<Report> certificate;  // involution, form, J-admissibility, symmetry of U
};

/// Factorization of an algebra with involution and form; every operator of U is
/// certified symmetric under the form adjoint.
inline InvolutiveFactorization factorize_with_involution(const Algebra& host, const Embedding& iota,
                                                         const InvolutionMap& sigma, const BilinearForm& f) {
  InvolutiveFactorization out;
  Report inv = verify_involution(host, sigma);
  if (!inv.passed()) throw MalcevError(ErrorKind::involution_invalid, inv.detail, inv.witness.value_or(Witness{}));
  for (std::size_t a = 0; a < iota.images.size(); ++a)
    if (sigma.apply(iota.images[a]) != Scalar(-1) * iota.images[a])
      throw MalcevError(ErrorKind::involution_invalid, "involution does not extend a -> -a on the embedded algebra",
                        Witness{{a}, {}, {sigma.apply(iota.images[a])}});
  out.certificate.push_back(inv);
  if (f.dim() != host.dim()) throw MalcevError(ErrorKind::dimension_mismatch, "form has the wrong size");
  if (!f.is_symmetric()) throw MalcevError(ErrorKind::not_symmetric, "form is not symmetric");
  if (!f.is_nonsingular()) throw MalcevError(ErrorKind::singular_form, "form is singular");
  out.certificate.push_back(Report::pass("form", f.dim() * f.dim(), "symmetric, non-singular"));
  Report j = j_admissibility(host, sigma);
  if (!j.passed()) throw MalcevError(ErrorKind::not_j_admissible, j.detail, j.witness.value_or(Witness{}));
  out.certificate.push_back(j);

  out.factorization = kronecker_factorize(host, iota);
  Report sym = Report::pass("symmetric-coordinates");
  for (std::size_t k = 0; k < out.factorization.operator_basis.size(); ++k) {
    ++sym.cases;
    const auto& op = out.factorization.operator_basis[k];
    OperatorMatrix adj = adjoint_operator(op, f, host.parities());
    if (adj.matrix != op.matrix) {
      Witness w;
      w.indices = {k};
      w.vectors = {(adj.matrix - op.matrix).data()};
      throw MalcevError(ErrorKind::not_symmetric, "coordinate operator u" + std::to_string(k) + " is not symmetric", w);
    }
  }
  out.certificate.push_back(sym);
  return out;
}

}  // namespace malcev

#endif  // MALCEV_INVOLUTION_HPP
