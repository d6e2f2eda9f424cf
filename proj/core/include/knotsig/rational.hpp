#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace knotsig {

using Integer = mpz_class;
/// GMP rationals are kept canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q" or "p" for integers.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Fixed 12-significant-digit style decimal rendering of an exact rational.
std::string to_decimal(const Rational& v, int significant_digits = 12);

double to_double(const Rational& v);

}  // namespace knotsig
