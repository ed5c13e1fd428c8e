#pragma once

#include <cstdint>
#include <optional>

#include "thinray/forms.hpp"
#include "thinray/lattice.hpp"
#include "thinray/polyhedron.hpp"

namespace thinray {

struct ApproxResult {
  std::int64_t q = 1;
  IntVec numerators;
  /// Certified upper bound on max_i |q theta_i - numerators_i|.
  Rational max_err;
};

/// Best q in [1, Q] for simultaneous approximation of theta, ties to the
/// smaller q. Requires Q >= 1.
ApproxResult simultaneous_approx(const Vec& theta, std::int64_t Q);

struct HalflineOptions {
  std::int64_t q_max = std::int64_t{1} << 20;
  /// Multiples of each approximation tried per Q.
  int multiples_per_q = 64;
};

struct HalflinePoint {
  IntVec point;
  std::int64_t Q = 0;  ///< 0 for rational directions
  std::int64_t q = 0;
  BigInt multiple;
  int membership_rejections = 0;
};

/// Squared distance from x to {y + lambda d : lambda >= lambda_bar} is < eps^2
/// and the projection parameter of x is >= lambda_bar. Exact.
bool near_halfline(const Vec& x, const Vec& y, const Vec& d, const Rational& eps, const Rational& lambda_bar);

/// Integer point of P (and of `face`, if given) within eps of the half-line
/// {y + lambda d : lambda >= lambda_bar}. Throws BudgetExhausted once Q
/// exceeds options.q_max.
HalflinePoint point_near_halfline(const HPolyhedron& P, const IntVec& y, const Vec& d, const Rational& eps,
                                  const Rational& lambda_bar, const std::optional<AffineSubspace>& face = std::nullopt,
                                  const HalflineOptions& options = {});

}  // namespace thinray
