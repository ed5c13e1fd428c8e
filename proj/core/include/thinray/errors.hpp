#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thinray {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Binary field operation on elements of two different number fields.
class MismatchedField : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a semantic constraint (reducible minimal
/// polynomial, zero denominator, bad interval, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; the message carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotPointed : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// facet_project called with -d in the recession cone.
class NoBlockingRow : public Error {
 public:
  using Error::Error;
};

/// shrink_epsilon called for a degree case whose leading coefficient is not
/// strictly negative.
class WrongCase : public Error {
 public:
  using Error::Error;
};

class NotUnboundedOnRay : public Error {
 public:
  using Error::Error;
};

/// A certificate could not be assembled although the restriction tends to
/// minus infinity (e.g. the ray leaves the rational hull of the face).
class CertificateError : public Error {
 public:
  using Error::Error;
};

class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

/// The near-ray search ran out of approximation budget. Existence is
/// guaranteed for genuine rays, so this only signals an insufficient budget.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::uint64_t q_max, std::uint64_t membership_rejections)
      : Error("budget exhausted at Q = " + std::to_string(q_max)),
        q_max_(q_max),
        membership_rejections_(membership_rejections) {}

  std::uint64_t q_max() const noexcept { return q_max_; }
  /// Number of candidates that were close to the half-line but outside P.
  std::uint64_t membership_rejections() const noexcept { return membership_rejections_; }

 private:
  std::uint64_t q_max_;
  std::uint64_t membership_rejections_;
};

}  // namespace thinray
