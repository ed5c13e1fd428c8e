#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thinray/forms.hpp"
#include "thinray/polyhedron.hpp"

namespace thinray {

/// Evaluates f at integer points, in plain rationals when f has rational data.
class IntegerEvaluator {
 public:
  explicit IntegerEvaluator(const CubicObjective& f);
  explicit IntegerEvaluator(CubicObjective&&) = delete;
  FieldElement operator()(const IntVec& x) const;

 private:
  const CubicObjective* f_;
  bool rational_;
  QVec T_;
  QVec M_;
  QVec V_;
  Rational c_;
};

/// Exact comparison of two real values (-1, 0, 1).
int compare(const FieldElement& a, const FieldElement& b);

enum class EnumOrder { Lex, ReverseLex };

/// Visits P cap Z^n cap [-R, R]^n in (reverse) lexicographic order.
void for_each_point(const HPolyhedron& P, long R, const std::function<void(const IntVec&)>& visit,
                    EnumOrder order = EnumOrder::Lex);
std::vector<IntVec> integer_points(const HPolyhedron& P, long R);

struct OracleResult {
  FieldElement min;
  IntVec argmin;  ///< lexicographically smallest minimizer
  std::uint64_t count = 0;
};

/// Throws EmptyIntersection when the box holds no point of P.
OracleResult enumerate_min(const CubicObjective& f, const HPolyhedron& P, long R, EnumOrder order = EnumOrder::Lex);

struct TrendReport {
  std::vector<long> radii;
  std::vector<std::optional<FieldElement>> minima;  ///< nullopt for an empty box
  std::vector<std::optional<IntVec>> argmins;
  std::vector<std::uint64_t> counts;
  bool nonincreasing = true;
};

/// Requires strictly increasing radii.
TrendReport trend(const CubicObjective& f, const HPolyhedron& P, const std::vector<long>& radii);

}  // namespace thinray
