#ifndef MALCEV_MODULE_HPP
#define MALCEV_MODULE_HPP

#include "malcev/algebra.hpp"
#include "malcev/cayley_dickson.hpp"
#include "malcev/identities.hpp"
#include "malcev/linalg.hpp"
#include "malcev/report.hpp"
#include "malcev/structure.hpp"

#include <cstddef>
#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

/// Right action of an algebra on a graded carrier: rho_x(v) is read as v.x. One
/// operator per basis element of the acting algebra, with the parity of that element.
struct Representation {
  Algebra acting;
  std::vector<int> carrier_parity;
  std::vector<std::string> carrier_labels;
  std::vector<OperatorMatrix> action;

  std::size_t carrier_dim() const { return carrier_parity.size(); }

  /// rho_x for an arbitrary element x of the acting algebra.
  Matrix operator_of(const Vector& x) const {
    Matrix m(carrier_dim(), carrier_dim());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) m = m + x[i] * action[i].matrix;
    return m;
  }

  bool is_zero_map() const {
    for (const auto& op : action)
      if (!op.is_zero()) return false;
    return true;
  }

  void validate() const {
    if (carrier_parity.empty()) throw MalcevError(ErrorKind::invalid_input, "carrier must be nonzero");
    if (action.size() != acting.dim())
      throw MalcevError(ErrorKind::dimension_mismatch, "one action operator per acting basis element required");
    if (!carrier_labels.empty() && carrier_labels.size() != carrier_dim())
      throw MalcevError(ErrorKind::dimension_mismatch, "carrier label count mismatch");
    for (std::size_t x = 0; x < action.size(); ++x) {
      const auto& m = action[x].matrix;
      if (m.rows() != carrier_dim() || m.cols() != carrier_dim())
        throw MalcevError(ErrorKind::dimension_mismatch, "action operator has the wrong size");
      if (action[x].parity != acting.parity(x) || !respects_grading(action[x], carrier_parity))
        throw MalcevError(ErrorKind::invalid_input, "action operator of " + acting.label(x) + " breaks the grading");
    }
  }

  std::string carrier_label(std::size_t i) const {
    return carrier_labels.empty() ? "w" + std::to_string(i + 1) : carrier_labels[i];
  }
};

inline Representation zero_representation(const Algebra& m, std::vector<int> carrier_parity) {
  Representation r{m, std::move(carrier_parity), {}, {}};
  for (std::size_t x = 0; x < m.dim(); ++x)
    r.action.push_back({Matrix(r.carrier_dim(), r.carrier_dim()), m.parity(x)});
  return r;
}

/// Reg M: the algebra acting on itself by right multiplication. With odd_shift the
/// carrier is a parity-shifted copy.
inline Representation regular_representation(const Algebra& m, bool odd_shift = false) {
  Representation r;
  r.acting = m;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    r.carrier_parity.push_back((m.parity(i) + (odd_shift ? 1 : 0)) & 1);
    r.carrier_labels.push_back(m.label(i) + "'");
  }
  for (std::size_t x = 0; x < m.dim(); ++x) {
    r.action.push_back({m.right_mult(unit_vector(m.dim(), x)), m.parity(x)});
  }
  return r;
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  if (!a.acting.same_structure(b.acting)) throw MalcevError(ErrorKind::invalid_input, "different acting algebras");
  Representation r;
  r.acting = a.acting;
  r.carrier_parity = a.carrier_parity;
  r.carrier_parity.insert(r.carrier_parity.end(), b.carrier_parity.begin(), b.carrier_parity.end());
  for (std::size_t i = 0; i < a.carrier_dim(); ++i) r.carrier_labels.push_back(a.carrier_label(i) + "_1");
  for (std::size_t i = 0; i < b.carrier_dim(); ++i) r.carrier_labels.push_back(b.carrier_label(i) + "_2");
  const std::size_t n = r.carrier_dim(), na = a.carrier_dim();
  for (std::size_t x = 0; x < a.action.size(); ++x) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) m(i, j) = a.action[x].matrix(i, j);
    for (std::size_t i = 0; i < b.carrier_dim(); ++i)
      for (std::size_t j = 0; j < b.carrier_dim(); ++j) m(na + i, na + j) = b.action[x].matrix(i, j);
    r.action.push_back({m, a.action[x].parity});
  }
  return r;
}

struct SplitExtension {
  Algebra base;
  Representation rep;
  Algebra total;  // basis: base vectors first, then carrier vectors

  std::size_t carrier_offset() const { return base.dim(); }

  Vector lift_carrier(const Vector& v) const {
    Vector out = zero_vector(total.dim());
    for (std::size_t i = 0; i < v.size(); ++i) out[base.dim() + i] = v[i];
    return out;
  }

  Vector carrier_part(const Vector& e) const {
    return Vector(e.begin() + static_cast<std::ptrdiff_t>(base.dim()), e.end());
  }
};

/// E = M + V with V^2 = 0 and (x+v)(y+w) = xy + rho_y(v) - (-1)^{|x||w|} rho_x(w).
inline SplitExtension split_null_extension(const Algebra& m, const Representation& rho) {
  rho.validate();
  if (!rho.acting.same_structure(m))
    throw MalcevError(ErrorKind::dimension_mismatch, "representation acts for a different algebra");
  const std::size_t d = m.dim(), n = rho.carrier_dim();
  std::vector<std::string> labels = m.labels();
  std::vector<int> parity = m.parities();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = rho.carrier_label(i);
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(l);
    parity.push_back(rho.carrier_parity[i]);
  }
  Algebra total(std::move(labels), std::move(parity));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) total.set_product(x, y, m.product(x, y));
  for (std::size_t y = 0; y < d; ++y)
    for (std::size_t v = 0; v < n; ++v) {
      // v . y = rho_y(v)
      std::vector<SVec::Term> vy, yv;
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& c = rho.action[y].matrix(r, v);
        if (is_zero(c)) continue;
        vy.emplace_back(static_cast<std::uint32_t>(d + r), c);
        yv.emplace_back(static_cast<std::uint32_t>(d + r), -Scalar(sign_of(m.parity(y) * rho.carrier_parity[v])) * c);
      }
      total.set_product(d + v, y, SVec::from_terms(std::move(vy)));
      total.set_product(y, d + v, SVec::from_terms(std::move(yv)));
    }
  return {m, rho, std::move(total)};
}

/// The extension is Malcev (and in H when require_h).
inline Report verify_module(const Algebra& m, const Representation& rho, bool require_h = true) {
  Report r;
  ScopedTimer timer(r);
  r.check = "module";
  SplitExtension e;
  try {
    e = split_null_extension(m, rho);
  } catch (const MalcevError& err) {
    r.status = Status::error;
    r.detail = err.what();
    return r;
  }
  Report mal = verify_malcev(e.total);
  r.cases += mal.cases;
  if (!mal.passed()) {
    r.status = mal.status;
    r.witness = mal.witness;
    r.detail = "split extension is not Malcev" + (mal.detail.empty() ? "" : ": " + mal.detail);
    return r;
  }
  if (require_h) {
    Report h = verify_h_variety(e.total, false);
    r.cases += h.cases;
    if (!h.passed()) {
      r.status = h.status;
      r.witness = h.witness;
      r.detail = "split extension is not in H" + (h.detail.empty() ? "" : ": " + h.detail);
      return r;
    }
  }
  return r;
}

/// Smallest rho-invariant (graded) subspace containing the given vectors.
inline Span submodule_generated(const Representation& rho, const std::vector<Vector>& vs) {
  const std::size_t n = rho.carrier_dim();
  const bool graded = std::any_of(rho.carrier_parity.begin(), rho.carrier_parity.end(), [](int p) { return p; });
  Span span(n);
  std::deque<Vector> queue;
  auto push = [&](const Vector& v) {
    if (span.add(v)) queue.push_back(v);
  };
  auto push_graded = [&](const Vector& v) {
    if (v.size() != n) throw std::invalid_argument("carrier vector has the wrong length");
    if (!graded) return push(v);
    for (int p = 0; p < 2; ++p) {
      Vector c = v;
      for (std::size_t i = 0; i < n; ++i)
        if (rho.carrier_parity[i] != p) c[i] = 0;
      push(c);
    }
  };
  for (const auto& v : vs) push_graded(v);
  while (!queue.empty()) {
    Vector v = queue.front();
    queue.pop_front();
    for (const auto& op : rho.action) push(op.apply(v));
  }
  return span;
}

inline Span submodule_generated(const Representation& rho, const Vector& v) {
  return submodule_generated(rho, std::vector<Vector>{v});
}

/// Basis of the supercentralizer: phi with rho_x phi = (-1)^{|phi||x|} phi rho_x,
/// even operators first.
inline std::vector<OperatorMatrix> centralizer_basis(const Representation& rho) {
  const std::size_t n = rho.carrier_dim();
  const auto& cp = rho.carrier_parity;
  const bool graded = std::any_of(cp.begin(), cp.end(), [](int p) { return p; }) || rho.acting.is_graded();
  std::vector<OperatorMatrix> out;
  for (int parity = 0; parity < (graded ? 2 : 1); ++parity) {
    std::vector<std::int64_t> var(n * n, -1);
    std::uint32_t count = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (cp[r] == ((cp[c] + parity) & 1)) var[r * n + c] = count++;
    SparseSystem sys(count);
    for (std::size_t x = 0; x < rho.action.size(); ++x) {
      const Matrix& rx = rho.action[x].matrix;
      const Scalar s = sign_of(parity * rho.acting.parity(x));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          SparseSystem::Row row;
          // (rx phi)(r,c) - s (phi rx)(r,c)
          for (std::size_t k = 0; k < n; ++k) {
            if (!is_zero(rx(r, k)) && var[k * n + c] >= 0) row[static_cast<std::uint32_t>(var[k * n + c])] += rx(r, k);
            if (!is_zero(rx(k, c)) && var[r * n + k] >= 0)
              row[static_cast<std::uint32_t>(var[r * n + k])] -= s * rx(k, c);
          }
          sys.add_equation(std::move(row));
        }
    }
    for (const auto& sol : sys.nullspace()) {
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (var[r * n + c] >= 0) m(r, c) = sol[static_cast<std::size_t>(var[r * n + c])];
      out.push_back({m, parity});
    }
  }
  return out;
}

struct IrreducibilityVerdict {
  bool irreducible = false;
  std::string reason;
  std::vector<Vector> proper_submodule;  // basis of a proper nonzero submodule when reducible
};

namespace detail {

/// Associative algebra generated by the identity and the action operators, as flat
/// n*n vectors.
inline std::vector<Matrix> enveloping_algebra(const Representation& rho) {
  const std::size_t n = rho.carrier_dim();
  Span span(n * n);
  std::vector<Matrix> basis;
  std::deque<Matrix> queue;
  auto push = [&](const Matrix& m) {
    if (span.add(m.data())) {
      basis.push_back(m);
      queue.push_back(m);
    }
  };
  push(Matrix::identity(n));
  while (!queue.empty()) {
    Matrix m = queue.front();
    queue.pop_front();
    for (const auto& op : rho.action) push(op.matrix * m);
    if (basis.size() == n * n) break;
  }
  return basis;
}

inline Scalar trace(const Matrix& m) {
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Monic minimal polynomial of m, coefficients c_0..c_{k-1} of m^k = sum c_d m^d.
inline std::vector<Scalar> minimal_polynomial(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Vector> powers{Matrix::identity(n).data()};
  Matrix p = Matrix::identity(n);
  while (true) {
    p = m * p;
    Matrix cols = Matrix::from_columns(powers, n * n);
    if (auto c = solve(cols, p.data())) return *c;
    powers.push_back(p.data());
  }
}

inline std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  if (v == 0) return out;
  if (v > mpz_class(1000000)) return out;  // trial division only for small coefficients
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

/// Rational roots of a monic polynomial x^k - sum c_d x^d found by the rational root
/// theorem; coefficients too large to factor by trial division give no candidates.
inline std::vector<Scalar> rational_roots(const std::vector<Scalar>& c) {
  const std::size_t k = c.size();
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> a(k + 1);  // integer coefficients, a[k] = l
  for (std::size_t d = 0; d < k; ++d) a[d] = mpz_class(-c[d] * l);
  a[k] = l;
  std::size_t shift = 0;
  while (shift < k && a[shift] == 0) ++shift;
  std::vector<Scalar> roots;
  if (shift > 0) roots.push_back(0);
  auto eval = [&](const Scalar& x) {
    Scalar v = 0;
    for (std::size_t d = k + 1; d-- > 0;) v = v * x + Scalar(a[d]);
    return v;
  };
  for (const auto& p : divisors(a[shift]))
    for (const auto& q : divisors(a[k]))
      for (int sign : {1, -1}) {
        Scalar x(sign * p, q);
        x.canonicalize();
        if (is_zero(eval(x)) && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  return roots;
}

}  // namespace detail

/// Irreducibility decided in stages: a basis vector generating a proper submodule; the
/// full matrix algebra as enveloping algebra (Burnside); a nonzero radical of the
/// enveloping algebra (its image is a proper submodule); a singular nonzero centralizer
/// element (its image is a proper submodule); a one-dimensional centralizer of a
/// semisimple carrier. Carriers escaping all stages are reported as undetermined.
inline IrreducibilityVerdict irreducibility(const Representation& rho) {
  rho.validate();
  const std::size_t n = rho.carrier_dim();
  if (rho.is_zero_map()) return {false, "zero action", {}};
  for (std::size_t i = 0; i < n; ++i) {
    Span s = submodule_generated(rho, unit_vector(n, i));
    if (s.dim() < n) return {false, "basis vector " + rho.carrier_label(i) + " generates a proper submodule", s.generators()};
  }
  std::vector<Matrix> env = detail::enveloping_algebra(rho);
  if (env.size() == n * n) return {true, "enveloping algebra is the full matrix algebra", {}};
  // radical of the trace form of the (faithful) enveloping algebra
  Matrix gram(env.size(), env.size());
  for (std::size_t i = 0; i < env.size(); ++i)
    for (std::size_t j = 0; j < env.size(); ++j) gram(i, j) = detail::trace(env[i] * env[j]);
  auto radical = nullspace(gram);
  if (!radical.empty()) {
    Matrix j(n, n);
    for (std::size_t i = 0; i < env.size(); ++i) j = j + radical[0][i] * env[i];
    std::vector<Vector> image;
    for (std::size_t c = 0; c < n; ++c) image.push_back(j.column(c));
    return {false, "enveloping algebra has a nonzero radical", submodule_generated(rho, image).generators()};
  }
  auto cent = centralizer_basis(rho);
  for (const auto& phi : cent) {
    if (rank(phi.matrix) < n) {
      std::vector<Vector> image;
      for (std::size_t c = 0; c < n; ++c) image.push_back(phi.matrix.column(c));
      return {false, "centralizer contains a singular operator", submodule_generated(rho, image).generators()};
    }
  }
  if (cent.size() == 1) return {true, "semisimple carrier with scalar centralizer", {}};
  // a rational eigenvalue of a non-scalar centralizer element gives a singular one
  for (const auto& phi : cent) {
    auto poly = detail::minimal_polynomial(phi.matrix);
    if (poly.size() < 2) continue;
    for (const auto& lambda : detail::rational_roots(poly)) {
      Matrix shifted = phi.matrix - lambda * Matrix::identity(n);
      std::vector<Vector> image;
      for (std::size_t c = 0; c < n; ++c) image.push_back(shifted.column(c));
      return {false, "centralizer element has a rational eigenvalue", submodule_generated(rho, image).generators()};
    }
  }
  throw MalcevError(ErrorKind::invalid_input, "irreducibility undetermined for this carrier");
}

inline bool is_irreducible(const Representation& rho) { return irreducibility(rho).irreducible; }

/// The algebra as a module over its multiplication algebra: left and right
/// multiplications by basis elements, plus the parity operator when graded so that
/// submodules are exactly the graded ideals.
inline Representation multiplication_representation(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::string> labels;
  std::vector<int> parity;
  Representation rho;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("L" + a.label(i));
    labels.push_back("R" + a.label(i));
    parity.push_back(a.parity(i));
    parity.push_back(a.parity(i));
    rho.action.push_back({a.left_mult(unit_vector(n, i)), a.parity(i)});
    rho.action.push_back({a.right_mult(unit_vector(n, i)), a.parity(i)});
  }
  if (a.is_graded()) {
    Matrix s = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      if (a.parity(i)) s(i, i) = -1;
    labels.push_back("parity");
    parity.push_back(0);
    rho.action.push_back({s, 0});
  }
  rho.acting = Algebra(labels, parity);
  rho.carrier_parity = a.parities();
  rho.carrier_labels = a.labels();
  return rho;
}

/// A.A != 0 and A has no proper nonzero (graded) ideal. Every basis vector generating
/// all of A is checked first; the remaining stages are those of irreducibility().
inline Report check_simple(const Algebra& a) {
  Report r = Report::pass("simple");
  ScopedTimer timer(r);
  if (a.nonzero_constants() == 0) return Report::fail("simple", Witness{}, "zero multiplication");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ++r.cases;
    Span s = ideal_closure(a, {unit_vector(a.dim(), i)});
    if (s.dim() != a.dim()) {
      r.status = Status::fail;
      r.witness = Witness{{i}, {a.label(i)}, {}};
      r.detail = "basis element generates a proper ideal of dimension " + std::to_string(s.dim());
      return r;
    }
  }
  try {
    IrreducibilityVerdict v = irreducibility(multiplication_representation(a));
    if (!v.irreducible) {
      r.status = Status::fail;
      r.witness = Witness{{}, {}, v.proper_submodule};
      r.detail = "proper ideal of dimension " + std::to_string(v.proper_submodule.size()) + " (" + v.reason + ")";
    }
  } catch (const MalcevError& e) {
    r.status = Status::error;
    r.detail = e.what();
  }
  return r;
}

inline bool is_simple(const Algebra& a) { return check_simple(a).passed(); }

/// ker rho contains no nonzero ideal of the acting algebra.
inline bool almost_faithful(const Representation& rho) {
  const std::size_t d = rho.acting.dim(), n = rho.carrier_dim();
  std::vector<Vector> cols;
  for (std::size_t x = 0; x < d; ++x) cols.push_back(rho.action[x].matrix.data());
  Matrix stacked = Matrix::from_columns(cols, n * n);
  std::vector<Vector> kernel = nullspace(stacked);
  return largest_ideal_inside(rho.acting, kernel).empty();
}

/// Vectors v of the carrier with rho_x(v) = 0 for every x (graded kernel basis).
inline std::vector<Vector> annihilated_vectors(const Representation& rho) {
  const std::size_t n = rho.carrier_dim();
  std::vector<Vector> rows;
  for (const auto& op : rho.action)
    for (std::size_t r = 0; r < n; ++r) rows.push_back(op.matrix.row(r));
  return nullspace(Matrix::from_rows(rows, n));
}

/// One summand isomorphic to Reg of the acting algebra: z -> z alpha(v, a, b).
struct Component {
  std::size_t carrier_index = 0;  // witness v
  std::size_t a = 0, b = 0;       // witness pair in the acting algebra
  int parity = 0;
  OperatorMatrix alpha;  // alpha operator on the split extension
  Matrix iso;            // carrier_dim x dim(acting); column z is z alpha
};

struct Decomposition {
  std::vector<Component> components;
  Matrix change_of_basis;  // columns: iso columns of all components, in order
};

/// Greedy complete decomposition of a module over the simple non-Lie Malcev algebra
/// into copies of its regular module, using the alpha operators of the split extension.
inline Decomposition decompose_into_irreducibles(const Representation& rho) {
  rho.validate();
  const Algebra& m = rho.acting;
  const std::size_t d = m.dim(), n = rho.carrier_dim();
  if (auto ann = annihilated_vectors(rho); !ann.empty()) {
    Witness w;
    w.vectors = {ann.front()};
    throw MalcevError(ErrorKind::hypothesis_violated, "a nonzero carrier vector is annihilated by the algebra", w);
  }
  SplitExtension e = split_null_extension(m, rho);
  const Algebra& t = e.total;
  Decomposition out;
  Span sum(n);
  for (std::size_t v = 0; v < n && sum.dim() < n; ++v) {
    const int pv = rho.carrier_parity[v];
    const SVec vv = SVec::basis(d + v);
    for (std::size_t a = 0; a < d && sum.dim() < n; ++a)
      for (std::size_t b = a + 1; b < d && sum.dim() < n; ++b) {
        const SVec sa = SVec::basis(a), sb = SVec::basis(b);
        Matrix iso(n, d);
        bool nonzero = false;
        for (std::size_t z = 0; z < d; ++z) {
          SVec img = p_function(t, SVec::basis(z), vv, sa, sb, m.parity(z), pv, m.parity(a), m.parity(b));
          for (const auto& [k, c] : img.terms()) {
            if (k < d) throw MalcevError(ErrorKind::invalid_input, "alpha image leaves the carrier");
            iso(k - d, z) = c;
            nonzero = true;
          }
        }
        if (!nonzero) continue;
        Span trial = sum;
        std::size_t added = 0;
        for (std::size_t z = 0; z < d; ++z) added += trial.add(iso.column(z)) ? 1 : 0;
        if (added == 0) continue;
        if (added != d) continue;  // image meets the current sum: not a fresh copy
        for (std::size_t z = 0; z < d; ++z) sum.add(iso.column(z));
        Component c;
        c.carrier_index = v;
        c.a = a;
        c.b = b;
        c.parity = pv;
        c.alpha = alpha_operator(t, vv, sa, sb);
        c.iso = iso;
        out.components.push_back(std::move(c));
      }
  }
  if (sum.dim() < n)
    throw MalcevError(ErrorKind::lie_component,
                      "alpha operators span only " + std::to_string(sum.dim()) + " of " + std::to_string(n) +
                          " carrier dimensions");
  std::vector<Vector> cols;
  for (const auto& c : out.components)
    for (std::size_t z = 0; z < d; ++z) cols.push_back(c.iso.column(z));
  out.change_of_basis = Matrix::from_columns(cols, n);
  return out;
}

/// iso(z a) = rho_a(iso(z)) on all basis pairs, for each component.
inline Report check_decomposition(const Representation& rho, const Decomposition& dec) {
  Report r = Report::pass("decomposition");
  const Algebra& m = rho.acting;
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& c = dec.components[i];
    for (std::size_t z = 0; z < d; ++z)
      for (std::size_t a = 0; a < d; ++a) {
        ++r.cases;
        Vector lhs = c.iso * m.product(z, a).to_dense(d);
        Vector rhs = rho.action[a].matrix * c.iso.column(z);
        if (lhs != rhs) {
          Witness w;
          w.indices = {i, z, a};
          w.vectors = {lhs, rhs};
          return Report::fail("decomposition", w, "component does not intertwine the action");
        }
      }
  }
  if (rank(dec.change_of_basis) != rho.carrier_dim())
    return Report::fail("decomposition", Witness{}, "components do not span the carrier");
  return r;
}

/// Action of the algebra on the whole host through an embedding: rho_a(m) = m . iota(a).
inline Representation adjoint_restriction(const Algebra& host, const Algebra& source, const std::vector<Vector>& images) {
  if (images.size() != source.dim())
    throw MalcevError(ErrorKind::dimension_mismatch, "one image per source basis element required");
  Representation r;
  r.acting = source;
  r.carrier_parity = host.parities();
  r.carrier_labels = host.labels();
  for (std::size_t a = 0; a < source.dim(); ++a) {
    host.check_size(images[a]);
    r.action.push_back({host.right_mult(images[a]), source.parity(a)});
  }
  return r;
}

}  // namespace malcev

#endif  // MALCEV_MODULE_HPP
