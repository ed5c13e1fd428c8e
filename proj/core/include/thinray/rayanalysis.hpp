#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinray/algebraic.hpp"
#include "thinray/forms.hpp"
#include "thinray/polynomial.hpp"

namespace thinray {

/// f(y + lambda d) = a3 lambda^3 + a2 lambda^2 + a1 lambda + a0.
struct RestrictionPoly {
  FieldElement a3;
  FieldElement a2;
  FieldElement a1;
  FieldElement a0;

  FieldElement eval(const FieldElement& lambda) const;
};

RestrictionPoly restriction(const CubicObjective& f, const Vec& y, const Vec& d);

enum class LimitKind { MinusInf, PlusInf, Constant };

struct LimitClass {
  LimitKind kind = LimitKind::Constant;
  /// Index of the first nonzero among a3, a2, a1, or 0.
  int degree = 0;
};

/// Sign of the first nonzero coefficient among a3, a2, a1.
LimitClass classify_limit(const RestrictionPoly& r);
/// "MINUS_INF", "PLUS_INF", "CONSTANT".
std::string to_string(LimitKind kind);

/// delta-terms of f(y + z + lambda d) relative to the restriction at y.
struct TranslationTerms {
  FieldElement d2;  ///< 3 T[z,d,d]
  FieldElement d1;  ///< 6 T[y,z,d] + 3 T[z,z,d] + 2 M[z,d]
  FieldElement d0;  ///< 3 T[y,z,z] + 3 T[y,y,z] + T[z,z,z] + 2 M[y,z] + M[z,z] + V[z]
};

TranslationTerms translation_terms(const CubicObjective& f, const Vec& y, const Vec& d, const Vec& z);

/// Upper bounds on |delta_i(z)| over ||z|| <= eps.
struct PerturbationBounds {
  Rational D2;
  Rational D1;
  Rational D0;
  Rational Uy;  ///< >= ||y||
  Rational Ud;  ///< >= ||d||
};

/// Rational upper bound on the Euclidean norm of x.
Rational norm_upper(const Vec& x);

PerturbationBounds perturbation_bounds(const CubicObjective& f, const Vec& y, const Vec& d, const Rational& eps);

enum class ShrinkCase { Deg2, Deg1 };

/// Halves eps0 until a2 + D2(eps) < 0 (Deg2) or a1 + D1(eps) < 0 (Deg1).
/// Throws WrongCase unless the relevant coefficient is strictly negative.
Rational shrink_epsilon(const CubicObjective& f, const Vec& y, const Vec& d, const Rational& eps0, ShrinkCase c);

struct DirectionDiagnostics {
  FieldElement t3;  ///< T[d,d,d]
  FieldElement m2;  ///< M[d,d]
  FieldElement v1;  ///< V[d]
  Vec tdd;          ///< T[d,d]
  Vec md;           ///< M[d]
  bool t3_zero = false;
  bool m2_zero = false;
  bool tdd_zero = false;
  bool md_zero = false;
  bool v1_nonneg = false;

  // second direction v
  std::optional<FieldElement> mdv;  ///< M[d,v]
  std::optional<Vec> tdv;           ///< T[d,v]
  bool mdv_zero = false;
  bool tdv_zero = false;
};

DirectionDiagnostics direction_diagnostics(const CubicObjective& f, const Vec& d,
                                           const std::optional<Vec>& v = std::nullopt);

/// Polynomial curve t -> (p_1(t), ..., p_n(t)).
struct Curve {
  std::vector<IntPolynomial> components;
  Rational lo;
  Rational hi;
};

struct CriticalDirection {
  AlgebraicReal root;
  FieldPtr field;  ///< null when the root is rational
  Vec direction;
};

struct CurveScan {
  /// Form whose vanishing was searched: 'T' (T[d,d,d]) or 'M' (M[d,d]).
  char form = 'T';
  /// Exact coefficients of the form along the curve, low to high degree.
  std::vector<FieldElement> expanded;
  /// Integer polynomial whose roots were isolated (primitive multiple of
  /// `expanded`, or its norm over Q for irrational objectives).
  IntPolynomial search_poly;
  bool identically_zero = false;
  std::vector<CriticalDirection> roots;
  /// Roots in the domain that could not be certified (uncertified
  /// irreducibility, or a field other than the objective's).
  int skipped_roots = 0;
};

/// Real roots inside [lo, hi] of the leading nonzero form along the curve.
CurveScan curve_critical_directions(const CubicObjective& f, const Curve& curve);

/// Evaluates the curve at a field element.
Vec eval_curve(const Curve& curve, const FieldElement& t);

}  // namespace thinray
