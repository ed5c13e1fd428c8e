#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thinray/rational.hpp"

namespace thinray {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// coefficient index = degree. Trailing zeros are always trimmed, so the
/// leading coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// t^k
  static IntPolynomial monomial(int k, const BigInt& coeff = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& leading() const { return coeffs_.back(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const;

  IntPolynomial derivative() const;
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Polynomial over Q, used for Euclidean algorithms and field reduction.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  Rational eval(const Rational& t) const;
  RatPolynomial derivative() const;
  RatPolynomial monic() const;
  /// Clears denominators and returns the primitive integer multiple with
  /// positive leading coefficient.
  IntPolynomial to_primitive_int() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& s, const RatPolynomial& a);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// (quotient, remainder); divisor must be nonzero.
  static std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
  /// Monic gcd (zero if both inputs are zero).
  static RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Distinct rational roots of p (p nonzero), ascending.
std::vector<Rational> rational_roots(const IntPolynomial& p);

/// Irreducibility over Q for degree <= 3 (rational-root test). Degree 1 is
/// irreducible; higher degrees are not decided and return false.
bool is_irreducible_low_degree(const IntPolynomial& p);

/// Sign variations in the coefficient sequence (zeros skipped).
int sign_variations(const std::vector<Rational>& coeffs);

/// Parses expressions such as "2*t^3 - t + 1", "t^2", "-3". Throws
/// ParseError on malformed input.
IntPolynomial parse_int_polynomial(std::string_view text, char var = 't');

}  // namespace thinray
