#ifndef MALCEV_SCALAR_HPP
#define MALCEV_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace malcev {

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Parses "n" or "p/q" (optional leading minus). Decimal and exponent forms are rejected.
inline std::optional<Scalar> try_parse_scalar(std::string_view text) {
  static const std::regex kPattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  std::string s(text);
  if (!std::regex_match(s, kPattern)) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class den(s.substr(slash + 1), 10);
    if (sgn(den) == 0) return std::nullopt;
  }
  Scalar q(s, 10);
  q.canonicalize();
  return q;
}

inline Scalar parse_scalar(std::string_view text) {
  auto q = try_parse_scalar(text);
  if (!q) throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  return *q;
}

/// Canonical text form: "n" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& s) {
  Scalar c(s);
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace malcev

#endif  // MALCEV_SCALAR_HPP
