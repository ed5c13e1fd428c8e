#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace thinray {

using BigInt = mpz_class;
/// Arbitrary-precision rational in canonical form (gmp keeps the
/// denominator positive and coprime to the numerator).
using Rational = mpq_class;

using IntVec = std::vector<BigInt>;
using QVec = std::vector<Rational>;
using QMatrix = std::vector<QVec>;

/// Parses "p", "-p", "p/q". Throws ValidationError on a zero denominator and
/// ParseError on anything else that is not a rational literal.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" with the sign on p.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Decimal rendering for humans, `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 12);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);
/// Nearest integer, ties rounded up.
BigInt round_of(const Rational& value);
Rational abs_of(const Rational& value);

/// Rational s with sqrt(x) <= s <= sqrt(x) * (1 + 2^-16) (s = 0 for x = 0).
/// Requires x >= 0.
Rational sqrt_upper(const Rational& x);

BigInt lcm_of_denominators(const QVec& values);

int sign_of(const Rational& value);
int sign_of(const BigInt& value);

Rational pow2(long exponent);

}  // namespace thinray
