#pragma once

#include <gmpxx.h>

#include <string>

namespace paulivol {

// All closed-form sums in this library are evaluated over exact rationals.
// The alternating sums cancel catastrophically in floating point (relative
// cancellation grows like d^d), so doubles appear only as a presentation
// layer on top of these types.
using Integer = mpz_class;
using Rational = mpq_class;

namespace exact {

/// C(n, k); returns 0 for k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// n!
Integer factorial(unsigned long n);

/// Largest integer <= q. Exact at integer arguments (no epsilon nudging).
Integer floor_int(const Rational& q);

/// q^e for e >= 0.
Rational pow_rational(const Rational& q, unsigned long e);

/// Canonical rational from numerator/denominator. den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p", or a plain decimal like "0.99" (converted exactly).
Rational parse_rational(const std::string& text);

/// Decimal rendering at `digits` fractional digits, rounded toward -inf.
/// The fixed rounding direction keeps lower bounds honest and output
/// byte-stable across runs.
std::string to_decimal_string(const Rational& q, unsigned digits);

/// Exact double conversion helper (rounds to nearest).
double to_double(const Rational& q);

/// ceil(sqrt(n)) for n >= 0.
Integer ceil_sqrt(const Integer& n);

/// True iff n is a perfect square; if so *root is set to sqrt(n).
bool is_perfect_square(const Integer& n, Integer* root);

}  // namespace exact
}  // namespace paulivol
