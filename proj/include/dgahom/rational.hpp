#pragma once

#include <gmpxx.h>

#include <string>

namespace dgahom {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact power with a possibly negative exponent; throws on 0^negative.
Rational rational_pow(const Rational& base, long exponent);

// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text);

}  // namespace dgahom
