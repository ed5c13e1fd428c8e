#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinray/forms.hpp"
#include "thinray/polyhedron.hpp"
#include "thinray/rayanalysis.hpp"
#include "thinray/witness.hpp"

namespace thinray {

enum class Verdict { CertifiedUnbounded, CertifiedBoundedAlongCheckedRays, Inconclusive };

/// "certified unbounded", "certified bounded along all checked rays", "inconclusive".
std::string to_string(Verdict v);

struct RayCheck {
  IntVec apex;
  RestrictionPoly restriction;
  LimitClass limit;
};

/// One extreme ray of rec(P) (or of an orthant piece when P is not pointed),
/// checked from every apex candidate of that piece.
struct ExtremeRayReport {
  std::size_t piece = 0;
  IntVec direction;
  std::vector<RayCheck> checks;
  /// First apex with MINUS_INF, and on-ray points y + k d (k = 1..10).
  std::optional<RayCheck> unbounded_from;
  std::vector<std::pair<IntVec, FieldElement>> on_ray_points;
};

struct DirectionReport {
  std::string source;  ///< "direction i" or "curve i root j"
  Vec direction;
  bool in_recession_cone = false;
  DirectionDiagnostics diagnostics;
  std::optional<RayCheck> minus_inf_from;  ///< first apex with MINUS_INF
  std::optional<ThinRayCertificate> certificate;
  std::optional<WitnessReport> witnesses;
  std::string note;
};

struct CurveReport {
  Curve curve;
  CurveScan scan;
};

/// One decision step of the quadratic analyzer for a candidate direction.
struct QuadraticStep {
  std::string source;
  Vec direction;
  std::string rule;  ///< which condition fired
  bool minus_inf = false;
  std::optional<IntVec> base;  ///< integer base realizing MINUS_INF
};

struct AnalyzeOptions {
  long apex_radius = 4;
  Rational eps0 = Rational(1, 2);
  std::vector<Rational> targets = {Rational(-10), Rational(-100), Rational(-1000)};
  WitnessOptions witness;
  bool generate_witnesses = true;
};

struct AnalysisReport {
  bool pointed = true;
  std::size_t pieces = 1;
  std::vector<IntVec> apex_candidates;
  std::vector<ExtremeRayReport> extreme_rays;
  std::vector<DirectionReport> directions;
  std::vector<CurveReport> curves;
  bool quadratic = false;
  std::vector<QuadraticStep> quadratic_steps;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const CubicObjective& f, const HPolyhedron& P, const std::vector<Vec>& extra_directions,
                       const std::vector<Curve>& extra_curves, const AnalyzeOptions& options = {});

}  // namespace thinray
