#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thinray/polynomial.hpp"
#include "thinray/rational.hpp"

namespace thinray {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

/// A real root of an integer polynomial, identified by an isolating interval.
/// `min_poly` is primitive with positive leading coefficient and has exactly
/// one real root in [lo, hi].
struct AlgebraicReal {
  IntPolynomial min_poly;
  Rational lo;
  Rational hi;
  /// False when the polynomial is a squarefree factor of degree >= 4 whose
  /// irreducibility was not established.
  bool irreducible = true;

  bool is_rational() const { return lo == hi; }
  double approx() const;
};

/// Validates and normalizes; throws ValidationError unless [lo, hi] isolates
/// exactly one root of the polynomial, or if a polynomial of degree <= 3 is
/// reducible over Q.
AlgebraicReal make_algebraic_real(const IntPolynomial& poly, const Rational& lo, const Rational& hi);

/// One entry per distinct real root of p, ascending, with pairwise disjoint
/// intervals. Each root carries the irreducible factor of p it belongs to.
std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p);

/// Same root, hi - lo <= width, by sign-preserving bisection.
AlgebraicReal refine(const AlgebraicReal& r, const Rational& width);

/// Number of real roots of squarefree p in the open interval (a, b), by
/// Descartes' rule on the Moebius-transformed polynomial. Exact when the
/// result is 0 or 1.
int descartes_bound(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Q(theta) for a real algebraic theta. Immutable once created and shared by
/// all of its elements.
class NumberField {
 public:
  /// Throws ValidationError if the generator's polynomial is reducible
  /// (checked for degree <= 3).
  static std::shared_ptr<const NumberField> create(const AlgebraicReal& generator);

  int degree() const { return generator_.min_poly.degree(); }
  const AlgebraicReal& generator() const { return generator_; }
  /// Monic minimal polynomial over Q.
  const RatPolynomial& monic_poly() const { return monic_; }
  /// Precomputed narrow enclosure of theta (width <= 2^-64).
  const Interval& enclosure() const { return enclosure_; }

  /// Same minimal polynomial and same root.
  bool same_as(const NumberField& other) const;

  std::string describe() const;

 private:
  explicit NumberField(AlgebraicReal generator);

  AlgebraicReal generator_;
  RatPolynomial monic_;
  Interval enclosure_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element c0 + c1*theta + ... of Q(theta), stored reduced modulo the minimal
/// polynomial. A null field means plain Q (a single coefficient). Rational
/// values embed into every field; operating on irrational elements of two
/// different fields throws MismatchedField.
class FieldElement {
 public:
  FieldElement() : coeffs_{Rational(0)} {}
  FieldElement(const Rational& value) : coeffs_{value} {}  // NOLINT(google-explicit-constructor)
  FieldElement(long value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  FieldElement(int value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  FieldElement(const BigInt& value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  /// Reduces `coeffs` (any length) modulo the field's minimal polynomial.
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  /// Length = field degree (1 for Q).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value, if the element lies in Q.
  std::optional<Rational> as_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  /// Exact value equality (fields compared only when both sides are irrational).
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement& b);

/// Exact sign of the real number a(theta).
int fe_sign(const FieldElement& a);

struct Approximation {
  Rational value;
  Rational err;
};

/// |value - a(theta)| <= err <= tol. Requires tol > 0.
Approximation fe_approx(const FieldElement& a, const Rational& tol);

/// Enclosure of a(theta) from the field's precomputed enclosure.
Interval fe_enclosure(const FieldElement& a);

/// Rational u >= a(theta) (and l <= a(theta) for the lower variant), within tol.
Rational fe_upper(const FieldElement& a, const Rational& tol = Rational(1, 1 << 20));
Rational fe_lower(const FieldElement& a, const Rational& tol = Rational(1, 1 << 20));

/// Decimal rendering for display; never used for decisions.
std::string fe_decimal(const FieldElement& a, int digits = 12);

/// Common field of the irrational entries (null if all rational). Throws
/// MismatchedField if two different fields occur.
FieldPtr common_field(std::span<const FieldElement> values);

}  // namespace thinray
