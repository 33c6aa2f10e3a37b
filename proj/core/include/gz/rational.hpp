#ifndef GZ_RATIONAL_HPP
#define GZ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gz {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// denominator > 0. No operation ever rounds.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with optional leading sign on p; q must be a
/// positive integer literal.
inline Rational parse_rational(const std::string& s) {
  const auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("rational: cannot parse '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
  if (digits == 0) throw bad();
  if (pos < s.size()) {
    if (s[pos] != '/') throw bad();
    ++pos;
    std::size_t den_digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++den_digits;
    if (den_digits == 0 || pos != s.size()) throw bad();
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gz

#endif
