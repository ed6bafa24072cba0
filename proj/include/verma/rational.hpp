#ifndef VERMA_RATIONAL_HPP
#define VERMA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace verma {

using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonneg_integer(const Rational& q) {
  return q.get_den() == 1 && sgn(q) >= 0;
}

// Exact integer value; caller must have checked is_integer and range.
inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_long: not an integer");
  if (!q.get_num().fits_slong_p())
    throw std::overflow_error("to_long: out of range");
  return q.get_num().get_si();
}

// "p/q" in canonical form, denominator omitted when 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p", "p/q". Decimals are rejected: scalars are exact.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' ||
                    ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok)
      throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// Cheap order-independent hash; equality stays exact, collisions are fine.
inline std::size_t hash_rational(const Rational& q) {
  const std::uint64_t hn = mpz_fdiv_ui(q.get_num_mpz_t(), 0x7fffffffffffffe7ULL);
  const std::uint64_t hd = mpz_fdiv_ui(q.get_den_mpz_t(), 0x7fffffffffffffe7ULL);
  std::uint64_t h = hn * 0x9e3779b97f4a7c15ULL;
  h ^= hd + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (sgn(q) < 0) h = ~h;
  return static_cast<std::size_t>(h);
}

} // namespace verma

#endif
