#ifndef MALCEV_ALGEBRA_HPP
#define MALCEV_ALGEBRA_HPP

#include "malcev/linalg.hpp"
#include "malcev/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

/// Sparse coefficient vector over a basis; entries sorted by index, no explicit zeros.
class SVec {
 public:
  using Term = std::pair<std::uint32_t, Scalar>;

  SVec() = default;

  static SVec basis(std::size_t i) {
    SVec v;
    v.terms_.emplace_back(static_cast<std::uint32_t>(i), Scalar(1));
    return v;
  }

  static SVec from_dense(const Vector& d) {
    SVec v;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!malcev::is_zero(d[i])) v.terms_.emplace_back(static_cast<std::uint32_t>(i), d[i]);
    return v;
  }

  /// Collects unsorted terms, merging repeated indices and dropping zeros.
  static SVec from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    SVec v;
    for (auto& t : raw) {
      if (!v.terms_.empty() && v.terms_.back().first == t.first) v.terms_.back().second += t.second;
      else v.terms_.push_back(std::move(t));
    }
    std::erase_if(v.terms_, [](const Term& t) { return malcev::is_zero(t.second); });
    return v;
  }

  Vector to_dense(std::size_t n) const {
    Vector d = zero_vector(n);
    for (const auto& [i, c] : terms_) d.at(i) = c;
    return d;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(std::size_t i) const {
    for (const auto& [k, c] : terms_)
      if (k == i) return c;
    return 0;
  }

  friend SVec operator+(const SVec& a, const SVec& b) {
    std::vector<Term> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(raw));
  }

  friend SVec operator-(const SVec& a, const SVec& b) { return a + Scalar(-1) * b; }

  friend SVec operator*(const Scalar& s, SVec v) {
    if (malcev::is_zero(s)) return SVec();
    for (auto& t : v.terms_) t.second *= s;
    return v;
  }

  friend bool operator==(const SVec& a, const SVec& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

/// Finite-dimensional (super)algebra given by sparse structure constants c_{ij}^k.
class Algebra {
 public:
  Algebra() = default;

  explicit Algebra(std::vector<std::string> labels, std::vector<int> parity = {})
      : labels_(std::move(labels)), parity_(std::move(parity)) {
    if (labels_.empty()) throw std::invalid_argument("algebra dimension must be positive");
    if (parity_.empty()) parity_.assign(labels_.size(), 0);
    if (parity_.size() != labels_.size()) throw std::invalid_argument("parity vector length mismatch");
    for (int p : parity_)
      if (p != 0 && p != 1) throw std::invalid_argument("parity bits must be 0 or 1");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("basis labels must be distinct");
    table_.assign(labels_.size() * labels_.size(), SVec());
  }

  /// Algebra with default labels prefix0..prefix{n-1}.
  static Algebra with_dim(std::size_t n, const std::string& prefix = "b", std::vector<int> parity = {}) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return Algebra(std::move(labels), std::move(parity));
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<int>& parities() const { return parity_; }
  int parity(std::size_t i) const { return parity_.at(i); }

  bool is_graded() const {
    return std::any_of(parity_.begin(), parity_.end(), [](int p) { return p != 0; });
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  const SVec& product(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

  void set_product(std::size_t i, std::size_t j, SVec value) {
    check_index(i);
    check_index(j);
    for (const auto& t : value.terms()) check_index(t.first);
    table_.at(i * dim() + j) = std::move(value);
  }

  void set_product(std::size_t i, std::size_t j, const Vector& value) { set_product(i, j, SVec::from_dense(value)); }

  void add_product_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    check_index(k);
    set_product(i, j, product(i, j) + c * SVec::basis(k));
  }

  /// Bilinear extension of the table.
  SVec mul(const SVec& x, const SVec& y) const {
    std::vector<SVec::Term> raw;
    for (const auto& [i, a] : x.terms())
      for (const auto& [j, b] : y.terms()) {
        const SVec& c = table_[i * dim() + j];
        if (c.is_zero()) continue;
        Scalar ab = a * b;
        for (const auto& [k, ck] : c.terms()) raw.emplace_back(k, ab * ck);
      }
    return SVec::from_terms(std::move(raw));
  }

  Vector mul(const Vector& x, const Vector& y) const {
    check_size(x);
    check_size(y);
    return mul(SVec::from_dense(x), SVec::from_dense(y)).to_dense(dim());
  }

  /// Matrix of y -> x*y (columns are images of basis vectors).
  Matrix left_mult(const Vector& x) const {
    Matrix m(dim(), dim());
    SVec sx = SVec::from_dense(x);
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(sx, SVec::basis(j)).to_dense(dim()));
    return m;
  }

  /// Matrix of y -> y*x.
  Matrix right_mult(const Vector& x) const {
    Matrix m(dim(), dim());
    SVec sx = SVec::from_dense(x);
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(SVec::basis(j), sx).to_dense(dim()));
    return m;
  }

  /// Number of nonzero (i, j, k) structure constants.
  std::size_t nonzero_constants() const {
    std::size_t n = 0;
    for (const auto& e : table_) n += e.terms().size();
    return n;
  }

  /// First (i, j, k) violating c_{ij}^k != 0 => p_k = p_i + p_j, if any.
  std::optional<std::array<std::size_t, 3>> grading_violation() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(i, j).terms())
          if (parity_[k] != ((parity_[i] + parity_[j]) & 1)) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
  }

  /// Parity of a vector when all of its nonzero coefficients share one parity (zero is even).
  std::optional<int> homogeneous_parity(const Vector& v) const {
    check_size(v);
    std::optional<int> p;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      if (p && *p != parity_[i]) return std::nullopt;
      p = parity_[i];
    }
    return p.value_or(0);
  }

  std::optional<int> homogeneous_parity(const SVec& v) const {
    std::optional<int> p;
    for (const auto& t : v.terms()) {
      if (p && *p != parity_[t.first]) return std::nullopt;
      p = parity_[t.first];
    }
    return p.value_or(0);
  }

  /// Component of v on the basis vectors of the given parity.
  Vector component(const Vector& v, int parity) const {
    check_size(v);
    Vector out = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (parity_[i] == parity) out[i] = v[i];
    return out;
  }

  bool same_structure(const Algebra& other) const {
    return dim() == other.dim() && parity_ == other.parity_ && table_ == other.table_;
  }

  void check_size(const Vector& v) const {
    if (v.size() != dim()) throw std::invalid_argument("vector does not match algebra dimension");
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim()) throw std::out_of_range("basis index out of range");
  }

  std::vector<std::string> labels_;
  std::vector<int> parity_;
  std::vector<SVec> table_;
};

/// Algebra whose basis vector i is basis vector order[i] of the source.
inline Algebra permuted(const Algebra& a, const std::vector<std::size_t>& order) {
  if (order.size() != a.dim()) throw std::invalid_argument("permutation length mismatch");
  std::vector<std::size_t> inverse(a.dim(), a.dim());
  for (std::size_t i = 0; i < order.size(); ++i) inverse.at(order[i]) = i;
  if (std::find(inverse.begin(), inverse.end(), a.dim()) != inverse.end())
    throw std::invalid_argument("not a permutation");
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (auto o : order) {
    labels.push_back(a.label(o));
    parity.push_back(a.parity(o));
  }
  Algebra out(std::move(labels), std::move(parity));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::vector<SVec::Term> raw;
      for (const auto& [k, c] : a.product(order[i], order[j]).terms()) raw.emplace_back(inverse[k], c);
      out.set_product(i, j, SVec::from_terms(std::move(raw)));
    }
  return out;
}

/// Element of a specific algebra: a coefficient vector tied to its algebra.
class Element {
 public:
  Element(const Algebra& algebra, Vector coeffs) : algebra_(&algebra), coeffs_(std::move(coeffs)) {
    algebra_->check_size(coeffs_);
  }

  static Element basis(const Algebra& algebra, std::size_t i) {
    return Element(algebra, unit_vector(algebra.dim(), i));
  }

  static Element zero(const Algebra& algebra) { return Element(algebra, zero_vector(algebra.dim())); }

  const Algebra& algebra() const { return *algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  SVec sparse() const { return SVec::from_dense(coeffs_); }
  bool is_zero() const { return malcev::is_zero(coeffs_); }
  std::optional<int> homogeneous_parity() const { return algebra_->homogeneous_parity(coeffs_); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

  friend Element operator+(const Element& a, const Element& b) {
    a.check_same(b);
    return Element(*a.algebra_, a.coeffs_ + b.coeffs_);
  }
  friend Element operator-(const Element& a, const Element& b) {
    a.check_same(b);
    return Element(*a.algebra_, a.coeffs_ - b.coeffs_);
  }
  friend Element operator*(const Scalar& s, const Element& a) { return Element(*a.algebra_, s * a.coeffs_); }

  void check_same(const Element& b) const {
    if (algebra_ != b.algebra_) throw std::invalid_argument("elements belong to different algebras");
  }

 private:
  const Algebra* algebra_;
  Vector coeffs_;
};

/// x*y in A; both elements must belong to A.
inline Element multiply(const Algebra& a, const Element& x, const Element& y) {
  if (&x.algebra() != &a || &y.algebra() != &a) throw std::invalid_argument("element does not belong to this algebra");
  return Element(a, a.mul(x.coeffs(), y.coeffs()));
}

/// Linear operator on a space with a right-action reading: x.alpha is matrix * x.
/// Composition follows the same reading: then(a, b) is x -> (x a) b.
struct OperatorMatrix {
  Matrix matrix;
  int parity = 0;

  std::size_t dim() const { return matrix.rows(); }
  Vector apply(const Vector& x) const { return matrix * x; }
  bool is_zero() const { return matrix.is_zero(); }

  static OperatorMatrix identity(std::size_t n) { return {Matrix::identity(n), 0}; }

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.matrix == b.matrix && a.parity == b.parity;
  }
};

inline OperatorMatrix then(const OperatorMatrix& first, const OperatorMatrix& second) {
  return {second.matrix * first.matrix, (first.parity + second.parity) & 1};
}

/// Whether op maps every parity-q basis vector into the parity-(q + op.parity) span.
inline bool respects_grading(const OperatorMatrix& op, const std::vector<int>& parity) {
  for (std::size_t c = 0; c < op.matrix.cols(); ++c)
    for (std::size_t r = 0; r < op.matrix.rows(); ++r)
      if (!is_zero(op.matrix(r, c)) && parity[r] != ((parity[c] + op.parity) & 1)) return false;
  return true;
}

/// If op is lambda * identity, returns lambda.
inline std::optional<Scalar> scalar_multiple_of_identity(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  Scalar lambda = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != (r == c ? lambda : Scalar(0))) return std::nullopt;
  return lambda;
}

}  // namespace malcev

#endif  // MALCEV_ALGEBRA_HPP
