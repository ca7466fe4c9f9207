#ifndef MALCEV_IDENTITIES_HPP
#define MALCEV_IDENTITIES_HPP

#include "malcev/algebra.hpp"
#include "malcev/report.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace malcev {

namespace detail {

inline int parity_of(const Algebra& a, const SVec& v) {
  auto p = a.homogeneous_parity(v);
  if (!p) throw std::invalid_argument("graded operation needs homogeneous arguments");
  return *p;
}

inline Scalar signed_scalar(int exponent) { return Scalar(sign_of(exponent)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Multilinear functions. The graded forms reduce to the classical ones when all
// parities are zero; parities are passed explicitly in the hot paths.

/// Super braces {x,y,z} = (xy)z - (-1)^{|y||z|}(xz)y + 2x(yz).
inline SVec braces(const Algebra& a, const SVec& x, const SVec& y, const SVec& z, int py, int pz) {
  SVec xy_z = a.mul(a.mul(x, y), z);
  SVec xz_y = a.mul(a.mul(x, z), y);
  SVec x_yz = a.mul(x, a.mul(y, z));
  return xy_z - detail::signed_scalar(py * pz) * xz_y + Scalar(2) * x_yz;
}

inline SVec braces(const Algebra& a, const SVec& x, const SVec& y, const SVec& z) {
  return braces(a, x, y, z, detail::parity_of(a, y), detail::parity_of(a, z));
}

/// Antiassociator [x,y,z] = (xy)z + x(yz).
inline SVec antiassociator(const Algebra& a, const SVec& x, const SVec& y, const SVec& z) {
  return a.mul(a.mul(x, y), z) + a.mul(x, a.mul(y, z));
}

/// Associator (x,y,z) = (xy)z - x(yz).
inline SVec associator(const Algebra& a, const SVec& x, const SVec& y, const SVec& z) {
  return a.mul(a.mul(x, y), z) - a.mul(x, a.mul(y, z));
}

/// Jacobian (xy)z + (yz)x + (zx)y for ungraded algebras; for graded algebras the
/// super Jacobian (xy)z - x(yz) - (-1)^{|y||z|}(xz)y on homogeneous arguments.
inline SVec jacobian(const Algebra& a, const SVec& x, const SVec& y, const SVec& z) {
  if (!a.is_graded()) return a.mul(a.mul(x, y), z) + a.mul(a.mul(y, z), x) + a.mul(a.mul(z, x), y);
  detail::parity_of(a, x);
  const int py = detail::parity_of(a, y), pz = detail::parity_of(a, z);
  return a.mul(a.mul(x, y), z) - a.mul(x, a.mul(y, z)) - detail::signed_scalar(py * pz) * a.mul(a.mul(x, z), y);
}

/// h(y,z,t,x,u) = {yz,t,u}x + (-1)^{|x||u|}{yz,t,x}u
///   + (-1)^{|x|(|z|+|t|+|u|)+|u||t|}{yx,z,u}t + (-1)^{|u|(|z|+|t|)+|x||t|}{yu,z,x}t.
inline SVec h_function(const Algebra& a, const SVec& y, const SVec& z, const SVec& t, const SVec& x, const SVec& u,
                       int pz, int pt, int px, int pu) {
  SVec yz = a.mul(y, z), yx = a.mul(y, x), yu = a.mul(y, u);
  SVec r = a.mul(braces(a, yz, t, u, pt, pu), x);
  r = r + detail::signed_scalar(px * pu) * a.mul(braces(a, yz, t, x, pt, px), u);
  r = r + detail::signed_scalar(px * (pz + pt + pu) + pu * pt) * a.mul(braces(a, yx, z, u, pz, pu), t);
  r = r + detail::signed_scalar(pu * (pz + pt) + px * pt) * a.mul(braces(a, yu, z, x, pz, px), t);
  return r;
}

inline SVec h_function(const Algebra& a, const SVec& y, const SVec& z, const SVec& t, const SVec& x, const SVec& u) {
  detail::parity_of(a, y);
  return h_function(a, y, z, t, x, u, detail::parity_of(a, z), detail::parity_of(a, t), detail::parity_of(a, x),
                    detail::parity_of(a, u));
}

/// p(x,y,z,t) = -{zt,x,y} - {yt,z,x} + {xt,y,z}, each term carrying the Koszul sign of
/// the reordering of (x,y,z,t) it uses.
inline SVec p_function(const Algebra& a, const SVec& x, const SVec& y, const SVec& z, const SVec& t, int px, int py,
                       int pz, int pt) {
  SVec r = Scalar(-1) * detail::signed_scalar((pz + pt) * (px + py)) * braces(a, a.mul(z, t), x, y, px, py);
  r = r - detail::signed_scalar(px * (py + pz + pt) + pt * pz) * braces(a, a.mul(y, t), z, x, pz, px);
  r = r + detail::signed_scalar(pt * (py + pz)) * braces(a, a.mul(x, t), y, z, py, pz);
  return r;
}

inline SVec p_function(const Algebra& a, const SVec& x, const SVec& y, const SVec& z, const SVec& t) {
  return p_function(a, x, y, z, t, detail::parity_of(a, x), detail::parity_of(a, y), detail::parity_of(a, z),
                    detail::parity_of(a, t));
}

enum class FormKind { antiassociator, braces, h, p };

inline std::size_t arity(FormKind k) {
  switch (k) {
    case FormKind::antiassociator:
    case FormKind::braces: return 3;
    case FormKind::h: return 5;
    case FormKind::p: return 4;
  }
  return 0;
}

/// Evaluates one of the named multilinear functions on elements of a.
inline Element special_form(const Algebra& a, FormKind kind, std::span<const Element> args) {
  if (args.size() != arity(kind))
    throw std::invalid_argument("wrong arity: expected " + std::to_string(arity(kind)) + " arguments, got " +
                                std::to_string(args.size()));
  std::vector<SVec> s;
  for (const auto& e : args) {
    if (&e.algebra() != &a) throw std::invalid_argument("element does not belong to this algebra");
    s.push_back(e.sparse());
  }
  SVec r;
  switch (kind) {
    case FormKind::antiassociator: r = antiassociator(a, s[0], s[1], s[2]); break;
    case FormKind::braces: r = braces(a, s[0], s[1], s[2]); break;
    case FormKind::h: r = h_function(a, s[0], s[1], s[2], s[3], s[4]); break;
    case FormKind::p: r = p_function(a, s[0], s[1], s[2], s[3]); break;
  }
  return Element(a, r.to_dense(a.dim()));
}

inline Element jacobian(const Algebra& a, const Element& x, const Element& y, const Element& z) {
  for (const Element* e : {&x, &y, &z})
    if (&e->algebra() != &a) throw std::invalid_argument("element does not belong to this algebra");
  return Element(a, jacobian(a, x.sparse(), y.sparse(), z.sparse()).to_dense(a.dim()));
}

/// Operator x -> p(x,y,z,t); its parity is |y|+|z|+|t|.
inline OperatorMatrix alpha_operator(const Algebra& a, const SVec& y, const SVec& z, const SVec& t) {
  const int py = detail::parity_of(a, y), pz = detail::parity_of(a, z), pt = detail::parity_of(a, t);
  OperatorMatrix op{Matrix(a.dim(), a.dim()), (py + pz + pt) & 1};
  for (std::size_t j = 0; j < a.dim(); ++j)
    op.matrix.set_column(j, p_function(a, SVec::basis(j), y, z, t, a.parity(j), py, pz, pt).to_dense(a.dim()));
  return op;
}

inline OperatorMatrix alpha_operator(const Algebra& a, const Element& y, const Element& z, const Element& t) {
  return alpha_operator(a, y.sparse(), z.sparse(), t.sparse());
}

// ---------------------------------------------------------------------------
// Exhaustive identity sweeps over basis tuples.

namespace detail {

inline Witness basis_witness(const Algebra& a, std::vector<std::size_t> idx, const SVec& defect) {
  Witness w;
  for (auto i : idx) w.labels.push_back(a.label(i));
  w.indices = std::move(idx);
  w.vectors.push_back(defect.to_dense(a.dim()));
  return w;
}

/// First basis pair violating xy = -(-1)^{|x||y|}yx, if any.
inline std::optional<Witness> anticommutativity_witness(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      SVec d = a.product(i, j) + signed_scalar(a.parity(i) * a.parity(j)) * a.product(j, i);
      if (!d.is_zero()) return basis_witness(a, {i, j}, d);
    }
  return std::nullopt;
}

}  // namespace detail

/// Super-anticommutativity on basis pairs plus the multilinear Malcev superidentity
///   (-1)^{|y||z|}(xz)(yt) = ((xy)z)t + (-1)^{|x|(|y|+|z|+|t|)}((yz)t)x
///     + (-1)^{(|x|+|y|)(|z|+|t|)}((zt)x)y + (-1)^{(|x|+|y|+|z|)|t|}((tx)y)z
/// on every basis quadruple. The first failure in lexicographic order is the witness.
inline Report verify_malcev(const Algebra& a) {
  Report report;
  ScopedTimer timer(report);
  report.check = "malcev";
  if (auto w = detail::anticommutativity_witness(a)) {
    report.status = Status::fail;
    report.detail = "anticommutativity fails on a basis pair";
    report.witness = std::move(*w);
    report.cases = 1;
    return report;
  }
  const std::size_t n = a.dim();
  // triple[(i*n + j)*n + k] = (e_i e_j) e_k
  std::vector<SVec> triple(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) triple[(i * n + j) * n + k] = a.mul(a.product(i, j), SVec::basis(k));
  auto tr = [&](std::size_t i, std::size_t j, std::size_t k) -> const SVec& { return triple[(i * n + j) * n + k]; };
  const auto& p = a.parities();
  std::size_t cases = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          ++cases;
          SVec lhs = detail::signed_scalar(p[y] * p[z]) * a.mul(a.product(x, z), a.product(y, t));
          SVec rhs = a.mul(tr(x, y, z), SVec::basis(t));
          rhs = rhs + detail::signed_scalar(p[x] * (p[y] + p[z] + p[t])) * a.mul(tr(y, z, t), SVec::basis(x));
          rhs = rhs + detail::signed_scalar((p[x] + p[y]) * (p[z] + p[t])) * a.mul(tr(z, t, x), SVec::basis(y));
          rhs = rhs + detail::signed_scalar((p[x] + p[y] + p[z]) * p[t]) * a.mul(tr(t, x, y), SVec::basis(z));
          SVec defect = lhs - rhs;
          if (!defect.is_zero()) {
            report.status = Status::fail;
            report.detail = "linearized Malcev identity fails on a basis quadruple (x,y,z,t)";
            report.witness = detail::basis_witness(a, {x, y, z, t}, defect);
            report.cases = cases;
            return report;
          }
        }
  report.cases = cases;
  return report;
}

namespace detail {

/// Structure constants scaled by the lcm L of their denominators, as machine integers.
/// Usable when every constant fits and the l1 norm R of the rows bounds all products of
/// degree four below 2^126 (h and its braces are homogeneous of degree 4 and 3).
struct IntegerTable {
  bool usable = false;
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;  // (i*n + j) -> terms
};

inline IntegerTable integer_table(const Algebra& a) {
  IntegerTable t;
  t.n = a.dim();
  mpz_class lcm = 1;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (const auto& [k, c] : a.product(i, j).terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  const mpz_class limit = mpz_class(1) << 28;
  t.rows.resize(t.n * t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      mpz_class norm = 0;
      for (const auto& [k, c] : a.product(i, j).terms()) {
        mpq_class scaled = c * lcm;
        mpz_class v = scaled.get_num();
        norm += abs(v);
        if (norm >= limit) return t;
        t.rows[i * t.n + j].emplace_back(k, v.get_si());
      }
    }
  t.usable = true;
  return t;
}

using Wide = __int128;
using WideVec = std::vector<std::pair<std::uint32_t, Wide>>;

/// Dense accumulator with a touched list, reset after each use.
struct Accumulator {
  std::vector<Wide> value;
  std::vector<std::uint32_t> touched;
  explicit Accumulator(std::size_t n) : value(n, 0) {}
  void add(std::uint32_t k, Wide c) {
    if (value[k] == 0) touched.push_back(k);
    value[k] += c;
  }
  WideVec take() {
    WideVec out;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto k : touched) {
      if (value[k] != 0) out.emplace_back(k, value[k]);
      value[k] = 0;
    }
    touched.clear();
    return out;
  }
  bool all_zero_and_reset() {
    bool zero = true;
    for (auto k : touched) {
      if (value[k] != 0) zero = false;
      value[k] = 0;
    }
    touched.clear();
    return zero;
  }
};

/// acc += s * (v . e_j)
inline void mul_right_basis(const IntegerTable& t, const WideVec& v, std::size_t j, Wide s, Accumulator& acc) {
  for (const auto& [k, c] : v)
    for (const auto& [m, d] : t.rows[k * t.n + j]) acc.add(m, s * c * d);
}

/// acc += s * (u . v)
inline void mul_vec(const IntegerTable& t, const WideVec& u, const WideVec& v, Wide s, Accumulator& acc) {
  for (const auto& [i, c] : u)
    for (const auto& [j, d] : v)
      for (const auto& [m, e] : t.rows[i * t.n + j]) acc.add(m, s * c * d * e);
}

inline WideVec basis_product(const IntegerTable& t, std::size_t i, std::size_t j) {
  WideVec out;
  for (const auto& [m, d] : t.rows[i * t.n + j]) out.emplace_back(m, d);
  return out;
}

/// Exact value of h on one basis quintuple.
inline SVec h_on_basis(const Algebra& a, std::size_t y, std::size_t z, std::size_t t, std::size_t x, std::size_t u) {
  const auto& p = a.parities();
  return h_function(a, SVec::basis(y), SVec::basis(z), SVec::basis(t), SVec::basis(x), SVec::basis(u), p[z], p[t], p[x],
                    p[u]);
}

inline Report h_failure(Report report, const Algebra& a, std::array<std::size_t, 5> q, std::size_t cases) {
  report.status = Status::fail;
  report.detail += "h fails on a basis quintuple (y,z,t,x,u)";
  report.witness = basis_witness(a, {q[0], q[1], q[2], q[3], q[4]}, h_on_basis(a, q[0], q[1], q[2], q[3], q[4]));
  report.cases = cases;
  return report;
}

}  // namespace detail

namespace detail {

inline Report h_variety_sweep(const Algebra& a, bool check_malcev_first) {
  Report report;
  report.check = "h-variety";
  if (check_malcev_first) {
    Report m = verify_malcev(a);
    if (!m.passed()) report.detail = "warning: algebra is not Malcev; ";
  }
  const std::size_t n = a.dim();
  const auto& p = a.parities();
  std::size_t cases = 0;
  const detail::IntegerTable it = detail::integer_table(a);
  if (it.usable) {
    using detail::Wide;
    using detail::WideVec;
    detail::Accumulator acc(n);
    // q[((y*n + z)*n + t)*n + u] = {yz, t, u} = ((yz)t)u - (-1)^{|t||u|}((yz)u)t + 2(yz)(tu)
    std::vector<WideVec> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = detail::basis_product(it, i, j);
    std::vector<WideVec> q(n * n * n * n);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const WideVec& yz = prod[y * n + z];
        if (yz.empty()) continue;
        std::vector<WideVec> yzt(n);
        for (std::size_t t = 0; t < n; ++t) {
          detail::mul_right_basis(it, yz, t, 1, acc);
          yzt[t] = acc.take();
        }
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t u = 0; u < n; ++u) {
            detail::mul_right_basis(it, yzt[t], u, 1, acc);
            detail::mul_right_basis(it, yzt[u], t, -Wide(sign_of(p[t] * p[u])), acc);
            detail::mul_vec(it, yz, prod[t * n + u], 2, acc);
            q[((y * n + z) * n + t) * n + u] = acc.take();
          }
      }
    auto Q = [&](std::size_t y, std::size_t z, std::size_t t, std::size_t u) -> const WideVec& {
      return q[((y * n + z) * n + t) * n + u];
    };
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t u = 0; u < n; ++u) {
              ++cases;
              detail::mul_right_basis(it, Q(y, z, t, u), x, 1, acc);
              detail::mul_right_basis(it, Q(y, z, t, x), u, sign_of(p[x] * p[u]), acc);
              detail::mul_right_basis(it, Q(y, x, z, u), t, sign_of(p[x] * (p[z] + p[t] + p[u]) + p[u] * p[t]), acc);
              detail::mul_right_basis(it, Q(y, u, z, x), t, sign_of(p[u] * (p[z] + p[t]) + p[x] * p[t]), acc);
              if (!acc.all_zero_and_reset()) return detail::h_failure(std::move(report), a, {y, z, t, x, u}, cases);
            }
    report.cases = cases;
    return report;
  }
  // br[(k*n + t)*n + u] = {e_k, e_t, e_u}
  std::vector<SVec> br(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        br[(k * n + t) * n + u] = braces(a, SVec::basis(k), SVec::basis(t), SVec::basis(u), p[t], p[u]);
  // {c, e_t, e_u} for c = sum c_k e_k, by linearity in the first slot
  auto br_of = [&](const SVec& c, std::size_t t, std::size_t u) {
    std::vector<SVec::Term> raw;
    for (const auto& [k, ck] : c.terms())
      for (const auto& [m, cm] : br[(k * n + t) * n + u].terms()) raw.emplace_back(m, ck * cm);
    return SVec::from_terms(std::move(raw));
  };
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t u = 0; u < n; ++u) {
            ++cases;
            const SVec& yz = a.product(y, z);
            SVec r = a.mul(br_of(yz, t, u), SVec::basis(x));
            r = r + detail::signed_scalar(p[x] * p[u]) * a.mul(br_of(yz, t, x), SVec::basis(u));
            r = r + detail::signed_scalar(p[x] * (p[z] + p[t] + p[u]) + p[u] * p[t]) *
                        a.mul(br_of(a.product(y, x), z, u), SVec::basis(t));
            r = r + detail::signed_scalar(p[u] * (p[z] + p[t]) + p[x] * p[t]) *
                        a.mul(br_of(a.product(y, u), z, x), SVec::basis(t));
            if (!r.is_zero()) return detail::h_failure(std::move(report), a, {y, z, t, x, u}, cases);
          }
  report.cases = cases;
  return report;
}

inline Report h_variety_direct(const Algebra& a) {
  Report report = Report::pass("h-variety");
  const std::size_t n = a.dim();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t u = 0; u < n; ++u) {
            ++report.cases;
            if (!h_on_basis(a, y, z, t, x, u).is_zero()) return h_failure(std::move(report), a, {y, z, t, x, u}, report.cases);
          }
  return report;
}

}  // namespace detail

/// h(y,z,t,x,u) = 0 on every basis quintuple (super signs when graded).
inline Report verify_h_variety(const Algebra& a, bool check_malcev_first = true) {
  return timed([&] { return detail::h_variety_sweep(a, check_malcev_first); });
}

/// Direct evaluation of h per quintuple in rationals; slow, an independent cross-check
/// of the precomputed sweep.
inline Report verify_h_variety_rational(const Algebra& a) {
  return timed([&] { return detail::h_variety_direct(a); });
}

/// J(x,y,xz) = J(x,y,z)x on basis triples (ungraded algebras). The identity is quadratic
/// in x, so this is a necessary condition only; verify_malcev is the complete check.
inline Report verify_malcev_quadratic(const Algebra& a) {
  Report report = Report::pass("malcev-quadratic");
  ScopedTimer timer(report);
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++report.cases;
        SVec ex = SVec::basis(x), ey = SVec::basis(y), ez = SVec::basis(z);
        SVec d = jacobian(a, ex, ey, a.mul(ex, ez)) - a.mul(jacobian(a, ex, ey, ez), ex);
        if (!d.is_zero()) {
          report.status = Status::fail;
          report.witness = detail::basis_witness(a, {x, y, z}, d);
          return report;
        }
      }
  return report;
}

}  // namespace malcev

#endif  // MALCEV_IDENTITIES_HPP
