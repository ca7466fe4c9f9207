#ifndef MALCEV_LINALG_HPP
#define MALCEV_LINALG_HPP

#include "malcev/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace malcev {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds the matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  void set_column(std::size_t c, const Vector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v.at(r);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return malcev::is_zero(s); });
  }

  /// Flattened row-major entries; used when operators are treated as vectors.
  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (malcev::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!malcev::is_zero(b(k, j))) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out = zero_vector(a.rows_);
    for (std::size_t c = 0; c < a.cols_; ++c) {
      if (malcev::is_zero(v[c])) continue;
      for (std::size_t r = 0; r < a.rows_; ++r)
        if (!malcev::is_zero(a(r, c))) out[r] += a(r, c) * v[c];
    }
    return out;
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}; one vector per free column, in increasing column order.
inline std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// Some solution of m x = b, if one exists.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b.at(r);
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

/// Incrementally built span that remembers its generators, so that members can be
/// written as combinations of them. Generators are only kept when independent.
class Span {
 public:
  explicit Span(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return generators_.size(); }
  const std::vector<Vector>& generators() const { return generators_; }

  /// Coefficients over the generators, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    auto [rest, coeffs] = reduce(v);
    if (!malcev::is_zero(rest)) return std::nullopt;
    return coeffs;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  /// Adds v as a generator when it is independent; returns whether it was added.
  bool add(const Vector& v) {
    auto [rest, coeffs] = reduce(v);
    if (malcev::is_zero(rest)) return false;
    std::size_t p = 0;
    while (malcev::is_zero(rest[p])) ++p;
    Scalar inv = 1 / rest[p];
    for (auto& x : rest) x *= inv;
    // rest = v - sum coeffs_i g_i, scaled; record its expression in generators.
    Vector combo = zero_vector(generators_.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) combo[i] = -coeffs[i] * inv;
    combo.back() = inv;
    for (auto& row : combos_) row.push_back(0);
    rows_.push_back(std::move(rest));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    generators_.push_back(v);
    return true;
  }

 private:
  std::pair<Vector, Vector> reduce(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("span ambient dimension mismatch");
    Vector rest = v;
    Vector coeffs = zero_vector(generators_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar f = rest[pivots_[r]];
      if (malcev::is_zero(f)) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!malcev::is_zero(rows_[r][c])) rest[c] -= f * rows_[r][c];
      for (std::size_t g = 0; g < combos_[r].size(); ++g) coeffs[g] += f * combos_[r][g];
    }
    return {std::move(rest), std::move(coeffs)};
  }

  std::size_t ambient_;
  std::vector<Vector> generators_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;
};

/// Sparse homogeneous linear system solved by incremental elimination. Suited to the
/// large, very sparse systems of centroid-type conditions.
class SparseSystem {
 public:
  using Row = std::map<std::uint32_t, Scalar>;

  explicit SparseSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivot_rows_.size(); }

  void add_equation(Row row) {
    for (auto it = row.begin(); it != row.end();) {
      if (malcev::is_zero(it->second)) {
        it = row.erase(it);
        continue;
      }
      auto piv = pivot_rows_.find(it->first);
      if (piv == pivot_rows_.end()) {
        ++it;
        continue;
      }
      const Scalar f = it->second;
      for (const auto& [k, c] : piv->second) {
        Scalar& target = row[k];
        target -= f * c;
      }
      it = row.erase(it);  // the pivot entry itself cancels exactly
    }
    // all remaining keys are non-pivots; leading one becomes a new pivot
    for (auto it = row.begin(); it != row.end();) {
      if (malcev::is_zero(it->second)) it = row.erase(it);
      else ++it;
    }
    if (row.empty()) return;
    const std::uint32_t lead = row.begin()->first;
    const Scalar inv = 1 / row.begin()->second;
    Row stored;
    for (auto it = std::next(row.begin()); it != row.end(); ++it) stored.emplace(it->first, it->second * inv);
    pivot_rows_.emplace(lead, std::move(stored));
  }

  /// Basis of the solution space, one vector per free unknown in increasing order.
  std::vector<Vector> nullspace() const {
    std::vector<Vector> basis;
    for (std::uint32_t free = 0; free < unknowns_; ++free) {
      if (pivot_rows_.count(free)) continue;
      Vector x = zero_vector(unknowns_);
      x[free] = 1;
      for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
        Scalar acc = 0;
        for (const auto& [k, c] : it->second)
          if (!malcev::is_zero(x[k])) acc += c * x[k];
        x[it->first] = -acc;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  std::size_t unknowns_;
  std::map<std::uint32_t, Row> pivot_rows_;  // pivot -> entries strictly after the pivot (leading 1 implied)
};

}  // namespace malcev

#endif  // MALCEV_LINALG_HPP
