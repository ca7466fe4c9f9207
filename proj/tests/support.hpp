#pragma once
// Independent oracles for the test suites: hand-typed tables and a naive dense
// multiplication that never touches the library's product code.

#include "malcev/malcev.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace oracle {

using malcev::Scalar;
using malcev::Vector;

/// Dense table: table[i][j] is the coordinate vector of e_i e_j.
struct Table {
  std::vector<std::string> labels;
  std::vector<std::vector<Vector>> cell;

  std::size_t dim() const { return labels.size(); }

  Vector mul(const Vector& x, const Vector& y) const {
    Vector out(dim(), Scalar(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < dim(); ++k) out[k] += x[i] * y[j] * cell[i][j][k];
      }
    }
    return out;
  }

  Vector basis(std::size_t i) const {
    Vector v(dim(), Scalar(0));
    v[i] = 1;
    return v;
  }
};

inline std::size_t find_label(const std::vector<std::string>& labels, const std::string& s) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return i;
  throw std::invalid_argument("no label " + s);
}

/// Cell syntax: "0", or a term like "-2e7", "e1", "2gvi" (g = gamma factor).
inline Vector parse_cell(const std::string& text, const std::vector<std::string>& labels, const Scalar& gamma) {
  Vector v(labels.size(), Scalar(0));
  if (text == "0") return v;
  std::size_t pos = 0;
  Scalar sign = 1;
  if (text[pos] == '-') {
    sign = -1;
    ++pos;
  }
  std::string digits;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
  Scalar c = digits.empty() ? Scalar(1) : Scalar(std::stoi(digits));
  if (pos < text.size() && text[pos] == 'g') {
    c *= gamma;
    ++pos;
  }
  v[find_label(labels, text.substr(pos))] = sign * c;
  return v;
}

inline Table make_table(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& rows,
                        const Scalar& gamma = 1) {
  Table t{std::move(labels), {}};
  for (const auto& row : rows) {
    std::vector<Vector> r;
    for (const auto& c : row) r.push_back(parse_cell(c, t.labels, gamma));
    t.cell.push_back(std::move(r));
  }
  return t;
}

// Multiplication table of M7(F) on e1..e7.
inline Table split_m7() {
  return make_table({"e1", "e2", "e3", "e4", "e5", "e6", "e7"},
                    {{"0", "2e2", "2e3", "2e4", "-2e5", "-2e6", "-2e7"},
                     {"-2e2", "0", "2e7", "-2e6", "e1", "0", "0"},
                     {"-2e3", "-2e7", "0", "2e5", "0", "e1", "0"},
                     {"-2e4", "2e6", "-2e5", "0", "0", "0", "e1"},
                     {"2e5", "-e1", "0", "0", "0", "-2e4", "2e3"},
                     {"2e6", "0", "-e1", "0", "2e4", "0", "-2e2"},
                     {"2e7", "0", "0", "-e1", "-2e3", "2e2", "0"}});
}

// Multiplication table of the seven-dimensional algebra from the division octonions.
// Row v, column k reads 2vk: anticommutativity with k v = -2vk forces it.
inline Table division_m7(const Scalar& gamma) {
  return make_table({"i", "j", "k", "v", "vi", "vj", "vk"},
                    {{"0", "2k", "-2j", "-2vi", "2v", "-2vk", "2vj"},
                     {"-2k", "0", "2i", "-2vj", "2vk", "2v", "-2vi"},
                     {"2j", "-2i", "0", "-2vk", "-2vj", "2vi", "2v"},
                     {"2vi", "2vj", "2vk", "0", "2gi", "2gj", "2gk"},
                     {"-2v", "-2vk", "2vj", "-2gi", "0", "2gk", "-2gj"},
                     {"2vk", "-2v", "-2vi", "-2gj", "-2gk", "0", "2gi"},
                     {"-2vj", "2vi", "-2v", "-2gk", "2gj", "-2gi", "0"}},
                    gamma);
}

inline Table from_algebra(const malcev::Algebra& a) {
  Table t{a.labels(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<Vector> r;
    for (std::size_t j = 0; j < a.dim(); ++j) r.push_back(a.product(i, j).to_dense(a.dim()));
    t.cell.push_back(std::move(r));
  }
  return t;
}

inline Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline bool zero(const Vector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

/// (xy)z + (yz)x + (zx)y by plain expansion.
inline Vector jacobian(const Table& t, const Vector& x, const Vector& y, const Vector& z) {
  return add(add(t.mul(t.mul(x, y), z), t.mul(t.mul(y, z), x)), t.mul(t.mul(z, x), y));
}

/// J(x, y, xz) - J(x, y, z) x, the ungraded Malcev identity.
inline Vector malcev_defect(const Table& t, const Vector& x, const Vector& y, const Vector& z) {
  return sub(jacobian(t, x, y, t.mul(x, z)), t.mul(jacobian(t, x, y, z), x));
}

/// Anticommutativity on basis pairs plus the Malcev identity with x ranging over e_a and
/// e_a + e_b: enough to detect any failure of the (quadratic in x) identity.
inline bool is_malcev(const Table& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!zero(add(t.cell[i][j], t.cell[j][i]))) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Vector x = a == b ? t.basis(a) : add(t.basis(a), t.basis(b));
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!zero(malcev_defect(t, x, t.basis(y), t.basis(z)))) return false;
    }
  return true;
}

/// Relabelled copy of a library algebra's table compared against a hand-typed one.
inline bool same_table(const malcev::Algebra& a, const Table& t) {
  if (a.dim() != t.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j).to_dense(a.dim()) != t.cell[i][j]) return false;
  return true;
}

}  // namespace oracle
