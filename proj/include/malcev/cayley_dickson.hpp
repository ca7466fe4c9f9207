#ifndef MALCEV_CAYLEY_DICKSON_HPP
#define MALCEV_CAYLEY_DICKSON_HPP

#include "malcev/algebra.hpp"
#include "malcev/linalg.hpp"
#include "malcev/report.hpp"
#include "malcev/structure.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

namespace detail {

inline std::string tensor_label(const std::string& a, const Algebra& u, std::size_t k) {
  if (u.dim() == 1) return a;
  return a + "*" + u.label(k);
}

inline void require_coordinate_algebra(const Algebra& u) {
  Report r = check_coordinate_algebra(u);
  if (!r.passed())
    throw MalcevError(ErrorKind::invalid_input, "coordinate algebra check failed: " + r.detail,
                      r.witness.value_or(Witness{}));
}

}  // namespace detail

/// Element [[a, alpha], [beta, b]] of the Cayley-Dickson matrix algebra over a unital
/// (super)commutative associative coordinate algebra; entries are coordinate vectors.
struct CayleyMatrix {
  Vector a, b;
  std::array<Vector, 3> alpha, beta;

  static CayleyMatrix zero(std::size_t n) {
    CayleyMatrix m;
    m.a = m.b = zero_vector(n);
    for (auto& v : m.alpha) v = zero_vector(n);
    for (auto& v : m.beta) v = zero_vector(n);
    return m;
  }

  /// e_i (x) u for the standard basis e0..e7 of C(F).
  static CayleyMatrix basis(std::size_t i, const Vector& u) {
    CayleyMatrix m = zero(u.size());
    switch (i) {
      case 0: m.a = u; m.b = u; break;
      case 1: m.a = u; m.b = Scalar(-1) * u; break;
      case 2: case 3: case 4: m.alpha[i - 2] = u; break;
      case 5: case 6: case 7: m.beta[i - 5] = u; break;
      default: throw std::out_of_range("Cayley basis index must be 0..7");
    }
    return m;
  }

  /// Coordinates over the basis e_i (x) u_k, index i * dim U + k.
  Vector coordinates() const {
    const std::size_t n = a.size();
    Vector out = zero_vector(8 * n);
    const Scalar half(1, 2);
    for (std::size_t k = 0; k < n; ++k) {
      out[0 * n + k] = half * (a[k] + b[k]);
      out[1 * n + k] = half * (a[k] - b[k]);
      for (std::size_t s = 0; s < 3; ++s) {
        out[(2 + s) * n + k] = alpha[s][k];
        out[(5 + s) * n + k] = beta[s][k];
      }
    }
    return out;
  }

  friend CayleyMatrix operator+(CayleyMatrix x, const CayleyMatrix& y) {
    x.a = x.a + y.a;
    x.b = x.b + y.b;
    for (std::size_t s = 0; s < 3; ++s) {
      x.alpha[s] = x.alpha[s] + y.alpha[s];
      x.beta[s] = x.beta[s] + y.beta[s];
    }
    return x;
  }
};

namespace detail {

inline Vector dot(const Algebra& u, const std::array<Vector, 3>& x, const std::array<Vector, 3>& y) {
  Vector r = zero_vector(u.dim());
  for (std::size_t s = 0; s < 3; ++s) r = r + u.mul(x[s], y[s]);
  return r;
}

/// Right-handed cross product; left factor entries stay on the left.
inline std::array<Vector, 3> cross(const Algebra& u, const std::array<Vector, 3>& x, const std::array<Vector, 3>& y) {
  return {u.mul(x[1], y[2]) - u.mul(x[2], y[1]), u.mul(x[2], y[0]) - u.mul(x[0], y[2]),
          u.mul(x[0], y[1]) - u.mul(x[1], y[0])};
}

inline std::array<Vector, 3> scale_right(const Algebra& u, const std::array<Vector, 3>& x, const Vector& c) {
  return {u.mul(x[0], c), u.mul(x[1], c), u.mul(x[2], c)};
}

inline std::array<Vector, 3> scale_left(const Algebra& u, const Vector& c, const std::array<Vector, 3>& x) {
  return {u.mul(c, x[0]), u.mul(c, x[1]), u.mul(c, x[2])};
}

inline std::array<Vector, 3> add3(const std::array<Vector, 3>& x, const std::array<Vector, 3>& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

inline std::array<Vector, 3> sub3(const std::array<Vector, 3>& x, const std::array<Vector, 3>& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

}  // namespace detail

/// [[a,al],[be,b]] . [[c,ga],[de,d]] =
///   [[ac + al.de, a ga + d al - be x de], [c be + b de + al x ga, be.ga + bd]],
/// with every product written first-operand-left so the rule also holds over
/// supercommutative coordinates.
inline CayleyMatrix cayley_product(const Algebra& u, const CayleyMatrix& x, const CayleyMatrix& y) {
  using namespace detail;
  CayleyMatrix r;
  r.a = u.mul(x.a, y.a) + dot(u, x.alpha, y.beta);
  r.alpha = sub3(add3(scale_left(u, x.a, y.alpha), scale_right(u, x.alpha, y.b)), cross(u, x.beta, y.beta));
  r.beta = add3(add3(scale_right(u, x.beta, y.a), scale_left(u, x.b, y.beta)), cross(u, x.alpha, y.alpha));
  r.b = dot(u, x.beta, y.alpha) + u.mul(x.b, y.b);
  return r;
}

inline Algebra field_algebra() {
  Algebra f(std::vector<std::string>{"1"});
  f.set_product(0, 0, SVec::basis(0));
  return f;
}

/// C(U) on the basis e_i (x) u_k (i = 0..7), e0 the identity matrix.
inline Algebra build_cayley_matrix_algebra(const Algebra& u) {
  detail::require_coordinate_algebra(u);
  const std::size_t n = u.dim();
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      labels.push_back(detail::tensor_label("e" + std::to_string(i), u, k));
      parity.push_back(u.parity(k));
    }
  Algebra c(std::move(labels), std::move(parity));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          CayleyMatrix x = CayleyMatrix::basis(i, unit_vector(n, k));
          CayleyMatrix y = CayleyMatrix::basis(j, unit_vector(n, l));
          c.set_product(i * n + k, j * n + l, cayley_product(u, x, y).coordinates());
        }
  return c;
}

namespace detail {

// Quaternion units 1, i, j, k as indices 0..3: unit_product[a][b] = {sign, index}.
inline std::pair<int, std::size_t> quaternion_unit_product(std::size_t a, std::size_t b) {
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const std::size_t index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return {sign[a][b], index[a][b]};
}

using Quaternion = std::array<Scalar, 4>;

inline Quaternion qmul(const Quaternion& x, const Quaternion& y) {
  Quaternion r{0, 0, 0, 0};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (is_zero(x[a]) || is_zero(y[b])) continue;
      auto [s, idx] = quaternion_unit_product(a, b);
      r[idx] += Scalar(s) * x[a] * y[b];
    }
  return r;
}

inline Quaternion qconj(Quaternion x) {
  for (std::size_t a = 1; a < 4; ++a) x[a] = -x[a];
  return x;
}

inline Quaternion qunit(std::size_t a) {
  Quaternion q{0, 0, 0, 0};
  q[a] = 1;
  return q;
}

}  // namespace detail

/// Octonions H + vH with v^2 = gamma on the basis 1, i, j, k, v, vi, vj, vk:
///   a(vb) = v(conj(a) b),  (vb)c = v(cb),  (va)(vb) = gamma b conj(a).
inline Algebra build_division_octonions(const Scalar& gamma) {
  using namespace detail;
  if (is_zero(gamma)) throw std::invalid_argument("gamma must be nonzero");
  Algebra o(std::vector<std::string>{"1", "i", "j", "k", "v", "vi", "vj", "vk"});
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const bool xv = x >= 4, yv = y >= 4;
      Quaternion a = qunit(x % 4), b = qunit(y % 4);
      Quaternion q;
      bool v_part;
      if (!xv && !yv) {
        q = qmul(a, b);
        v_part = false;
      } else if (!xv && yv) {
        q = qmul(qconj(a), b);
        v_part = true;
      } else if (xv && !yv) {
        q = qmul(b, a);
        v_part = true;
      } else {
        q = qmul(b, qconj(a));
        for (auto& c : q) c *= gamma;
        v_part = false;
      }
      Vector out = zero_vector(8);
      for (std::size_t s = 0; s < 4; ++s) out[(v_part ? 4 : 0) + s] = q[s];
      o.set_product(x, y, out);
    }
  return o;
}

/// Same space with the (super)commutator [x,y] = xy - (-1)^{|x||y|} yx.
inline Algebra commutator_algebra(const Algebra& a) {
  Algebra c(a.labels(), a.parities());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      c.set_product(i, j, a.product(i, j) - Scalar(sign_of(a.parity(i) * a.parity(j))) * a.product(j, i));
  return c;
}

struct Quotient {
  Algebra algebra;
  Matrix projection;             // quotient_dim x source_dim
  std::vector<std::size_t> kept;  // source index of each quotient basis vector
};

/// Quotient by the span of central elements (z x = x z = 0 for all basis x). For each
/// central direction the lowest-index basis vector carrying it is dropped; the
/// remaining basis vectors keep their order.
inline Quotient central_quotient(const Algebra& a, const std::vector<Vector>& central) {
  const std::size_t n = a.dim();
  if (central.empty()) throw MalcevError(ErrorKind::invalid_input, "no central elements given");
  for (std::size_t c = 0; c < central.size(); ++c) {
    a.check_size(central[c]);
    if (is_zero(central[c])) throw MalcevError(ErrorKind::invalid_input, "central element is zero");
    SVec z = SVec::from_dense(central[c]);
    for (std::size_t x = 0; x < n; ++x) {
      SVec zx = a.mul(z, SVec::basis(x)), xz = a.mul(SVec::basis(x), z);
      if (!zx.is_zero() || !xz.is_zero()) {
        Witness w;
        w.indices = {c, x};
        w.labels = {"z" + std::to_string(c), a.label(x)};
        w.vectors = {zx.to_dense(n), xz.to_dense(n)};
        throw MalcevError(ErrorKind::not_central, "element does not commute with basis vector " + a.label(x), w);
      }
    }
  }
  RowEchelon e = rref(Matrix::from_rows(central, n));
  std::vector<bool> dropped(n, false);
  for (auto p : e.pivots) dropped[p] = true;
  Quotient q;
  std::vector<std::size_t> position(n, n);
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) {
      position[i] = q.kept.size();
      q.kept.push_back(i);
      labels.push_back(a.label(i));
      parity.push_back(a.parity(i));
    }
  if (q.kept.empty()) throw MalcevError(ErrorKind::invalid_input, "quotient would be zero");
  q.projection = Matrix(q.kept.size(), n);
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) q.projection(position[i], i) = 1;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!dropped[c]) q.projection(position[c], e.pivots[r]) = -e.reduced(r, c);
  q.algebra = Algebra(std::move(labels), std::move(parity));
  for (std::size_t i = 0; i < q.kept.size(); ++i)
    for (std::size_t j = 0; j < q.kept.size(); ++j)
      q.algebra.set_product(i, j, q.projection * a.product(q.kept[i], q.kept[j]).to_dense(n));
  return q;
}

inline Quotient central_quotient(const Algebra& a, const Vector& z) {
  return central_quotient(a, std::vector<Vector>{z});
}

struct M7Variant {
  enum class Kind { split, division };
  Kind kind = Kind::split;
  Scalar gamma = -1;

  static M7Variant split() { return {}; }
  static M7Variant division(Scalar g = -1) { return {Kind::division, std::move(g)}; }

  std::string name() const { return kind == Kind::split ? "split" : "division"; }
};

/// The 7-dimensional simple non-Lie Malcev algebra: C(F)^(-)/F e0 (basis e1..e7) or
/// O^(-)/F 1 (basis i, j, k, v, vi, vj, vk).
inline Algebra build_m7(const M7Variant& variant = M7Variant::split()) {
  if (variant.kind == M7Variant::Kind::split) {
    Algebra c = commutator_algebra(build_cayley_matrix_algebra(field_algebra()));
    return central_quotient(c, unit_vector(8, 0)).algebra;
  }
  Algebra o = commutator_algebra(build_division_octonions(variant.gamma));
  return central_quotient(o, unit_vector(8, 0)).algebra;
}

/// M7(U) = C(U)^(-) modulo the central subspace e0 (x) U; basis e_i (x) u_k, i = 1..7.
inline Algebra build_m7_over(const Algebra& u) {
  Algebra c = commutator_algebra(build_cayley_matrix_algebra(u));
  std::vector<Vector> central;
  for (std::size_t k = 0; k < u.dim(); ++k) central.push_back(unit_vector(c.dim(), k));
  return central_quotient(c, central).algebra;
}

/// A7 (x) U with (a(x)u)(b(x)w) = ab (x) uw, basis index a * dim U + u; A7 must be even.
inline Algebra tensor_with_coordinates(const Algebra& a7, const Algebra& u) {
  if (a7.is_graded()) throw MalcevError(ErrorKind::invalid_input, "first factor must be purely even");
  detail::require_coordinate_algebra(u);
  const std::size_t n = u.dim();
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < a7.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      labels.push_back(detail::tensor_label(a7.label(i), u, k));
      parity.push_back(u.parity(k));
    }
  Algebra t(std::move(labels), std::move(parity));
  for (std::size_t i = 0; i < a7.dim(); ++i)
    for (std::size_t j = 0; j < a7.dim(); ++j) {
      const SVec& ab = a7.product(i, j);
      if (ab.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          std::vector<SVec::Term> raw;
          for (const auto& [m, c] : ab.terms())
            for (const auto& [w, d] : u.product(k, l).terms())
              raw.emplace_back(static_cast<std::uint32_t>(m * n + w), c * d);
          t.set_product(i * n + k, j * n + l, SVec::from_terms(std::move(raw)));
        }
    }
  return t;
}

enum class CoordinateKind {
  field,           // F
  polynomial,      // F[t]/(t^n - c_{n-1} t^{n-1} - ... - c_0); params = c_0..c_{n-1}
  grassmann,       // exterior algebra on params[0] odd generators
  dual_grassmann,  // F[t]/(t^2) (x) Lambda(theta): basis 1, t | theta, t theta
};

/// Small unital (super)commutative associative algebras used as coordinates. The unit
/// is always basis vector 0.
inline Algebra build_sample_coordinates(CoordinateKind kind, const std::vector<Scalar>& params = {}) {
  switch (kind) {
    case CoordinateKind::field: return field_algebra();
    case CoordinateKind::polynomial: {
      const std::size_t n = params.size();
      if (n == 0) throw std::invalid_argument("polynomial coordinates need at least one relation coefficient");
      std::vector<std::string> labels{"1"};
      for (std::size_t d = 1; d < n; ++d) labels.push_back(d == 1 ? "t" : "t^" + std::to_string(d));
      Algebra u(labels);
      // reduce t^m for m < 2n using t^n = sum c_d t^d
      std::vector<Vector> power(2 * n - 1, zero_vector(n));
      for (std::size_t d = 0; d < n; ++d) power[d][d] = 1;
      for (std::size_t m = n; m < 2 * n - 1; ++m) {
        // t^m = t * t^{m-1}
        const Vector& prev = power[m - 1];
        Vector next = zero_vector(n);
        for (std::size_t d = 0; d + 1 < n; ++d) next[d + 1] += prev[d];
        for (std::size_t d = 0; d < n; ++d) next[d] += prev[n - 1] * params[d];
        power[m] = next;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u.set_product(i, j, power[i + j]);
      return u;
    }
    case CoordinateKind::grassmann: {
      if (params.size() != 1 || params[0] < 0 || params[0] > 8 || params[0].get_den() != 1)
        throw std::invalid_argument("grassmann coordinates need one generator count in 0..8");
      const unsigned g = static_cast<unsigned>(params[0].get_num().get_ui());
      const std::uint32_t count = 1u << g;
      std::vector<std::string> labels;
      std::vector<int> parity;
      for (std::uint32_t m = 0; m < count; ++m) {
        std::string label;
        for (unsigned b = 0; b < g; ++b)
          if (m & (1u << b)) label += (g == 1 ? std::string("th") : "th" + std::to_string(b + 1));
        labels.push_back(m == 0 ? "1" : label);
        parity.push_back(std::popcount(m) & 1);
      }
      Algebra u(labels, parity);
      for (std::uint32_t x = 0; x < count; ++x)
        for (std::uint32_t y = 0; y < count; ++y) {
          const int s = detail::exterior_sign(x, y);
          if (s != 0) u.set_product(x, y, Scalar(s) * SVec::basis(x | y));
        }
      return u;
    }
    case CoordinateKind::dual_grassmann: {
      Algebra u(std::vector<std::string>{"1", "t", "th", "t*th"}, {0, 0, 1, 1});
      // t^2 = 0, th^2 = 0, everything else follows from commuting t and the unit
      const std::size_t one = 0, t = 1, th = 2, tth = 3;
      for (std::size_t x = 0; x < 4; ++x) {
        u.set_product(one, x, SVec::basis(x));
        u.set_product(x, one, SVec::basis(x));
      }
      u.set_product(t, th, SVec::basis(tth));
      u.set_product(th, t, SVec::basis(tth));
      return u;
    }
  }
  throw std::invalid_argument("unknown coordinate kind");
}

/// Named members of the coordinate corpus: F, dual, quadratic (t^2 = 1), truncated3,
/// lambda1, lambda2, dual-lambda1.
inline Algebra sample_coordinates(const std::string& name) {
  if (name == "F") return build_sample_coordinates(CoordinateKind::field);
  if (name == "dual") return build_sample_coordinates(CoordinateKind::polynomial, {0, 0});
  if (name == "quadratic") return build_sample_coordinates(CoordinateKind::polynomial, {1, 0});
  if (name == "truncated3") return build_sample_coordinates(CoordinateKind::polynomial, {0, 0, 0});
  if (name == "lambda1") return build_sample_coordinates(CoordinateKind::grassmann, {1});
  if (name == "lambda2") return build_sample_coordinates(CoordinateKind::grassmann, {2});
  if (name == "dual-lambda1") return build_sample_coordinates(CoordinateKind::dual_grassmann);
  throw std::invalid_argument("unknown coordinate algebra '" + name + "'");
}

/// Canonical embedding a -> a (x) 1 of A7 into A7 (x) U (unit at coordinate index 0).
inline std::vector<Vector> canonical_tensor_embedding(std::size_t a7_dim, const Algebra& u) {
  auto unit = find_unit(u);
  if (!unit) throw MalcevError(ErrorKind::invalid_input, "coordinate algebra has no unit");
  std::vector<Vector> images;
  const std::size_t n = u.dim();
  for (std::size_t i = 0; i < a7_dim; ++i) {
    Vector v = zero_vector(a7_dim * n);
    for (std::size_t k = 0; k < n; ++k) v[i * n + k] = (*unit)[k];
    images.push_back(v);
  }
  return images;
}

}  // namespace malcev

#endif  // MALCEV_CAYLEY_DICKSON_HPP
