#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fanmoduli {

// Arbitrary-precision rational, always kept in canonical form (positive
// denominator, coprime numerator/denominator). GMP's mpq_class maintains the
// canonical form for all arithmetic; values built from raw parts must go
// through make_rational or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", optional leading sign, surrounding whitespace.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Decimal rendering with a fixed number of fractional digits (presentation
// only; never used for decisions).
std::string to_decimal(const Rational& q, int digits);

}  // namespace fanmoduli
