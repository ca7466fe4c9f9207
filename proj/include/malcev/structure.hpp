#ifndef MALCEV_STRUCTURE_HPP
#define MALCEV_STRUCTURE_HPP

#include "malcev/algebra.hpp"
#include "malcev/identities.hpp"
#include "malcev/linalg.hpp"
#include "malcev/report.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace malcev {

/// Unit element of a, if one exists (solves e x = x e = x on the basis).
inline std::optional<Vector> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  SparseSystem sys(n + 1);  // last unknown is the constant term, fixed to -1 below
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t side = 0; side < 2; ++side) {
      // sum_l e_l * c_{lj} (or c_{jl}) - e_j = 0, per output coordinate
      std::vector<SparseSystem::Row> rows(n);
      for (std::size_t l = 0; l < n; ++l) {
        const SVec& prod = side == 0 ? a.product(l, j) : a.product(j, l);
        for (const auto& [k, c] : prod.terms()) rows[k][static_cast<std::uint32_t>(l)] += c;
      }
      rows[j][static_cast<std::uint32_t>(n)] += 1;
      for (auto& r : rows) sys.add_equation(std::move(r));
    }
  // a solution with last coordinate normalized to -1
  for (const auto& v : sys.nullspace()) {
    if (is_zero(v[n])) continue;
    Vector e(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    return Scalar(-1) / v[n] * e;
  }
  return std::nullopt;
}

inline Report check_associative(const Algebra& a) {
  Report r = Report::pass("associative");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        ++r.cases;
        SVec d = associator(a, SVec::basis(i), SVec::basis(j), SVec::basis(k));
        if (!d.is_zero()) {
          r.status = Status::fail;
          r.witness = detail::basis_witness(a, {i, j, k}, d);
          return r;
        }
      }
  return r;
}

/// xy = (-1)^{|x||y|} yx on basis pairs (plain commutativity when ungraded).
inline Report check_supercommutative(const Algebra& a) {
  Report r = Report::pass("supercommutative");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ++r.cases;
      SVec d = a.product(i, j) - Scalar(sign_of(a.parity(i) * a.parity(j))) * a.product(j, i);
      if (!d.is_zero()) {
        r.status = Status::fail;
        r.witness = detail::basis_witness(a, {i, j}, d);
        return r;
      }
    }
  return r;
}

/// Unital, (super)commutative and associative, as required of coordinate algebras.
inline Report check_coordinate_algebra(const Algebra& a) {
  if (auto g = a.grading_violation()) {
    Witness w;
    w.indices = {(*g)[0], (*g)[1], (*g)[2]};
    return Report::fail("coordinate-algebra", w, "table does not respect the grading");
  }
  auto unit = find_unit(a);
  if (!unit) return Report::fail("coordinate-algebra", Witness{}, "algebra has no unit");
  Report c = check_supercommutative(a);
  if (!c.passed()) {
    c.check = "coordinate-algebra";
    c.detail = "not supercommutative";
    return c;
  }
  Report s = check_associative(a);
  if (!s.passed()) {
    s.check = "coordinate-algebra";
    s.detail = "not associative";
    return s;
  }
  return Report::pass("coordinate-algebra", c.cases + s.cases);
}

/// Basis of the (super)centroid: operators with (xy)a = x(ya) = (-1)^{|a||y|}(xa)y on
/// basis pairs. Even operators first (identity leading), then odd ones.
inline std::vector<OperatorMatrix> centroid_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<OperatorMatrix> out;
  for (int parity = 0; parity < (a.is_graded() ? 2 : 1); ++parity) {
    // unknown m(r,c), the r-coordinate of e_c a, allowed when p_r = p_c + parity
    std::vector<std::int64_t> var(n * n, -1);
    std::uint32_t count = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (a.parity(r) == ((a.parity(c) + parity) & 1)) var[r * n + c] = count++;
    auto v = [&](std::size_t r, std::size_t c) { return var[r * n + c]; };
    SparseSystem sys(count);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar sgn_j = sign_of(parity * a.parity(j));
        std::vector<SparseSystem::Row> left(n), right(n);
        // (e_i e_j) a
        for (const auto& [k, c] : a.product(i, j).terms())
          for (std::size_t s = 0; s < n; ++s)
            if (v(s, k) >= 0) {
              left[s][static_cast<std::uint32_t>(v(s, k))] += c;
              right[s][static_cast<std::uint32_t>(v(s, k))] += c;
            }
        for (std::size_t r = 0; r < n; ++r) {
          // - e_i (e_j a): coefficient m(r,j) times e_i e_r
          if (v(r, j) >= 0)
            for (const auto& [s, c] : a.product(i, r).terms()) left[s][static_cast<std::uint32_t>(v(r, j))] -= c;
          // - sign (e_i a) e_j: coefficient m(r,i) times e_r e_j
          if (v(r, i) >= 0)
            for (const auto& [s, c] : a.product(r, j).terms())
              right[s][static_cast<std::uint32_t>(v(r, i))] -= sgn_j * c;
        }
        for (auto& row : left) sys.add_equation(std::move(row));
        for (auto& row : right) sys.add_equation(std::move(row));
      }
    Span span(n * n);
    std::vector<OperatorMatrix> ops;
    auto add = [&](const Matrix& m) {
      if (span.add(m.data())) ops.push_back({m, parity});
    };
    if (parity == 0) add(Matrix::identity(n));  // the identity always solves the system
    for (const auto& sol : sys.nullspace()) {
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (v(r, c) >= 0) m(r, c) = sol[static_cast<std::size_t>(v(r, c))];
      add(m);
    }
    out.insert(out.end(), ops.begin(), ops.end());
  }
  return out;
}

/// Reports the first basis pair where op breaks the (super)centroid relations.
inline Report check_centroid_member(const Algebra& a, const OperatorMatrix& op) {
  Report r = Report::pass("centroid-member");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++r.cases;
      Vector xy_a = op.apply(a.product(i, j).to_dense(n));
      Vector x_ya = a.mul(unit_vector(n, i), op.apply(unit_vector(n, j)));
      Vector xa_y = Scalar(sign_of(op.parity * a.parity(j))) * a.mul(op.apply(unit_vector(n, i)), unit_vector(n, j));
      if (xy_a != x_ya || xy_a != xa_y) {
        Witness w;
        w.indices = {i, j};
        w.labels = {a.label(i), a.label(j)};
        w.vectors = {xy_a, x_ya, xa_y};
        r.status = Status::fail;
        r.witness = w;
        return r;
      }
    }
  return r;
}

/// Basis of {n : (n,x,y) = (x,n,y) = (x,y,n) = 0 for all x, y}.
inline std::vector<Vector> nucleus(const Algebra& a) {
  const std::size_t n = a.dim();
  SparseSystem sys(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int slot = 0; slot < 3; ++slot) {
        std::vector<SparseSystem::Row> rows(n);
        for (std::size_t l = 0; l < n; ++l) {
          SVec el = SVec::basis(l), ei = SVec::basis(i), ej = SVec::basis(j);
          SVec d = slot == 0 ? associator(a, el, ei, ej) : slot == 1 ? associator(a, ei, el, ej) : associator(a, ei, ej, el);
          for (const auto& [s, c] : d.terms()) rows[s][static_cast<std::uint32_t>(l)] += c;
        }
        for (auto& r : rows) sys.add_equation(std::move(r));
      }
  return sys.nullspace();
}

/// Smallest two-sided ideal containing the given elements. In graded algebras the
/// generators are split into homogeneous components first, so the result is graded.
inline Span ideal_closure(const Algebra& a, const std::vector<Vector>& generators) {
  const std::size_t n = a.dim();
  Span span(n);
  std::deque<Vector> queue;
  auto push = [&](const Vector& v) {
    if (span.add(v)) queue.push_back(v);
  };
  for (const auto& g : generators) {
    a.check_size(g);
    if (a.is_graded()) {
      push(a.component(g, 0));
      push(a.component(g, 1));
    } else {
      push(g);
    }
  }
  while (!queue.empty()) {
    SVec v = SVec::from_dense(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      push(a.mul(v, SVec::basis(k)).to_dense(n));
      push(a.mul(SVec::basis(k), v).to_dense(n));
    }
  }
  return span;
}

/// Largest ideal of a contained in the span of the given vectors (graded when a is).
inline std::vector<Vector> largest_ideal_inside(const Algebra& a, const std::vector<Vector>& subspace) {
  const std::size_t n = a.dim();
  std::vector<Vector> current = subspace;
  while (true) {
    if (current.empty()) return current;
    // x = sum c_i current_i with x e_k, e_k x inside span(current) and, when graded,
    // both homogeneous components inside span(current)
    Span host(n);
    for (const auto& v : current) host.add(v);
    std::vector<Vector> basis = host.generators();
    const std::size_t m = basis.size();
    // a complement test: w in span(host) iff Q w = 0 for Q spanning the annihilator
    Matrix rows = Matrix::from_rows(basis, n);
    std::vector<Vector> annihilator = nullspace(rows);  // vectors q with <basis_i, q> = 0
    std::vector<Vector> constraints;
    auto constrain = [&](const std::vector<Vector>& images) {
      // images[i] is the image of basis_i; require annihilator . sum c_i images[i] = 0
      for (const auto& q : annihilator) {
        Vector row = zero_vector(m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t s = 0; s < n; ++s) row[i] += q[s] * images[i][s];
        constraints.push_back(row);
      }
    };
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Vector> left, right;
      for (const auto& b : basis) {
        left.push_back(a.mul(unit_vector(n, k), b));
        right.push_back(a.mul(b, unit_vector(n, k)));
      }
      constrain(left);
      constrain(right);
    }
    if (a.is_graded()) {
      std::vector<Vector> even;
      for (const auto& b : basis) even.push_back(a.component(b, 0));
      constrain(even);
    }
    std::vector<Vector> coeffs =
        constraints.empty() ? nullspace(Matrix(0, m)) : nullspace(Matrix::from_rows(constraints, m));
    std::vector<Vector> next;
    for (const auto& c : coeffs) {
      Vector x = zero_vector(n);
      for (std::size_t i = 0; i < m; ++i) x = x + c[i] * basis[i];
      next.push_back(x);
    }
    if (next.size() == current.size()) return next;
    current = std::move(next);
  }
}

namespace detail {

/// Product of exterior monomials given as generator bitmasks: sign and result mask.
inline int exterior_sign(std::uint32_t g, std::uint32_t h) {
  if (g & h) return 0;
  // each generator in h passes over the generators of g with larger index
  int swaps = 0;
  for (std::uint32_t bits = h; bits; bits &= bits - 1) {
    const int idx = std::countr_zero(bits);
    swaps += std::popcount(g >> (idx + 1));
  }
  return sign_of(swaps);
}

inline std::string monomial_label(std::uint32_t g) {
  if (g == 0) return "1";
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (g & (1u << i)) s += "g" + std::to_string(i + 1);
  return s;
}

}  // namespace detail

/// Grassmann envelope G0 (x) A0 + G1 (x) A1 over the exterior algebra on n generators,
/// as an ungraded algebra; (g(x)m)(g'(x)m') = (gg')(x)(mm').
inline Algebra grassmann_envelope(const Algebra& a, unsigned generators = 2) {
  if (generators > 16) throw std::invalid_argument("too many Grassmann generators");
  struct Slot {
    std::uint32_t g;
    std::size_t m;
  };
  std::vector<Slot> slots;
  std::vector<std::string> labels;
  const std::uint32_t monomials = 1u << generators;
  for (std::uint32_t g = 0; g < monomials; ++g)
    for (std::size_t m = 0; m < a.dim(); ++m)
      if (static_cast<int>(std::popcount(g) & 1) == a.parity(m)) {
        slots.push_back({g, m});
        labels.push_back(g == 0 ? a.label(m) : detail::monomial_label(g) + "*" + a.label(m));
      }
  if (slots.empty()) throw std::invalid_argument("empty Grassmann envelope");
  std::vector<std::int64_t> index(static_cast<std::size_t>(monomials) * a.dim(), -1);
  for (std::size_t s = 0; s < slots.size(); ++s) index[slots[s].g * a.dim() + slots[s].m] = static_cast<std::int64_t>(s);
  Algebra env(std::move(labels));
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::size_t t = 0; t < slots.size(); ++t) {
      const int sign = detail::exterior_sign(slots[s].g, slots[t].g);
      if (sign == 0) continue;
      const std::uint32_t g = slots[s].g | slots[t].g;
      std::vector<SVec::Term> raw;
      for (const auto& [k, c] : a.product(slots[s].m, slots[t].m).terms()) {
        auto target = index[g * a.dim() + k];
        if (target < 0) throw std::invalid_argument("algebra table does not respect its grading");
        raw.emplace_back(static_cast<std::uint32_t>(target), Scalar(sign) * c);
      }
      env.set_product(s, t, SVec::from_terms(std::move(raw)));
    }
  return env;
}

}  // namespace malcev

#endif  // MALCEV_STRUCTURE_HPP
