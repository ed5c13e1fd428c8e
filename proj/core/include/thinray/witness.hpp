#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinray/diophantine.hpp"
#include "thinray/forms.hpp"
#include "thinray/lattice.hpp"
#include "thinray/polyhedron.hpp"
#include "thinray/rayanalysis.hpp"

namespace thinray {

enum class DegreeCase { Deg3, Deg2, Deg1ZeroContraction, Deg1Face };

/// "DEG3", "DEG2", "DEG1_ZERO_CONTRACTION", "DEG1_FACE".
std::string to_string(DegreeCase c);

struct ThinRayCertificate {
  RaySpec ray;
  DegreeCase degree_case = DegreeCase::Deg3;
  Rational eps;
  /// H = {x : 3 x^T T[d,d] + M[d,d] = 0}, split into rational rows (DEG1_FACE only).
  std::optional<AffineSubspace> face;
  RestrictionPoly restriction;
};

/// Throws NotUnboundedOnRay unless f -> -inf along the ray, ValidationError if
/// it is not a ray of P, CertificateError if the face does not contain it.
ThinRayCertificate build_certificate(const CubicObjective& f, const HPolyhedron& P, const RaySpec& ray,
                                     const Rational& eps0 = Rational(1, 2));

struct WitnessPoint {
  IntVec point;
  FieldElement value;
  Rational value_upper;  ///< rational upper bound on value
  Rational target;
  Rational eps;          ///< tube radius the point was certified against
  Rational lambda_bar;
  std::int64_t Q = 0;
  std::int64_t q = 0;
};

struct WitnessOptions {
  std::int64_t q_max = std::int64_t{1} << 20;
  int max_halvings = 20;
};

struct WitnessReport {
  std::vector<WitnessPoint> points;
  std::vector<Rational> targets_met;
  Rational final_eps;
  int eps_halvings = 0;
  std::int64_t q_max = 0;
  std::int64_t largest_Q = 0;
  bool budget_exhausted = false;
  std::uint64_t membership_rejections = 0;
};

/// Targets must be strictly decreasing. Stops at the first target the budget
/// cannot reach and flags budget_exhausted.
WitnessReport generate_witnesses(const CubicObjective& f, const HPolyhedron& P, const ThinRayCertificate& cert,
                                 const std::vector<Rational>& targets, const WitnessOptions& options = {});

/// Bounding polynomial coefficients (c3, c2, c1, c0) of the eps-tube for a
/// certificate, exact.
std::vector<FieldElement> tube_bound(const CubicObjective& f, const ThinRayCertificate& cert, const Rational& eps);

}  // namespace thinray
