#pragma once

#include <string>
#include <vector>

#include "thinray/analyze.hpp"
#include "thinray/cli/problem.hpp"
#include "thinray/oracle.hpp"

namespace thinray::cli {

/// Exact values are strings or coefficient vectors; every value also carries
/// a 12-digit decimal under "decimal_display_only".
Json rational_json(const Rational& r);
Json value_json(const FieldElement& v);
Json vec_json(const Vec& v);
Json int_vec_json(const IntVec& v);
Json field_json(const FieldPtr& field);
Json algebraic_json(const AlgebraicReal& a);

Json restriction_json(const RestrictionPoly& r);
Json limit_json(const LimitClass& c);
Json diagnostics_json(const DirectionDiagnostics& d);
Json curve_json(const Curve& c);
Json curve_scan_json(const CurveScan& s);
Json certificate_json(const ThinRayCertificate& c);
Json witness_report_json(const WitnessReport& r);
Json trend_json(const TrendReport& t);
Json analysis_json(const AnalysisReport& r);

std::vector<std::string> analysis_summary(const AnalysisReport& r);
std::vector<std::string> witness_summary(const WitnessReport& r);
std::vector<std::string> trend_summary(const TrendReport& t);

std::string point_string(const IntVec& v);

}  // namespace thinray::cli
