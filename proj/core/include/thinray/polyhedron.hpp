#pragma once

#include <cstddef>
#include <vector>

#include "thinray/forms.hpp"
#include "thinray/rational.hpp"

namespace thinray {

/// P = {x : A x <= b}. Rows may be redundant; m = 0 gives R^n.
class HPolyhedron {
 public:
  HPolyhedron() = default;
  HPolyhedron(int n, QMatrix A, QVec b);

  int dim() const { return n_; }
  std::size_t rows() const { return b_.size(); }
  const QMatrix& A() const { return A_; }
  const QVec& b() const { return b_; }

  /// a_i^T x for a single row.
  FieldElement row_dot(std::size_t i, const Vec& x) const;
  Rational row_dot(std::size_t i, const IntVec& x) const;

 private:
  int n_ = 0;
  QMatrix A_;
  QVec b_;
};

/// Ray R(y, d) = {y + lambda d : lambda >= 0} with integer apex.
struct RaySpec {
  IntVec apex;
  Vec direction;
};

bool contains(const HPolyhedron& P, const Vec& x);
bool contains(const HPolyhedron& P, const IntVec& x);
/// A d <= 0.
bool in_recession(const HPolyhedron& P, const Vec& d);
bool is_ray(const HPolyhedron& P, const RaySpec& r);
/// rank(A) = n.
bool is_pointed(const HPolyhedron& P);

/// Extreme rays of rec(P) as primitive integer vectors. Requires a pointed P
/// with n <= 4 (NotPointed / DimensionTooLarge otherwise).
std::vector<IntVec> extreme_rays(const HPolyhedron& P);

struct FacetProjection {
  Vec y;
  FieldElement p;
  std::size_t tight_row = 0;
};

/// y = x - p d with p = min over rows with a_i^T d < 0 of a_i^T x / a_i^T d.
/// Requires A x <= 0 and A d <= 0; ties go to the smallest row index.
/// Throws NoBlockingRow when no row has a_i^T d < 0.
FacetProjection facet_project(const HPolyhedron& P, const Vec& x, const Vec& d);

/// Exact rank of a rational matrix.
int rank(const QMatrix& A);

/// Divides by the gcd of the entries after clearing denominators.
IntVec primitive_integer(const QVec& v);

}  // namespace thinray
