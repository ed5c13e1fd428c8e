#pragma once

#include <optional>
#include <vector>

#include "thinray/forms.hpp"
#include "thinray/rational.hpp"

namespace thinray {

/// Row-major integer matrix.
using IntMatrix = std::vector<IntVec>;

IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& A);

struct HnfResult {
  IntMatrix H;  ///< column Hermite normal form, H = B U
  IntMatrix U;  ///< unimodular
  int rank = 0;
};

/// Column-style HNF: H = B U is lower echelon, pivots positive, entries left
/// of a pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& B, int ncols);
HnfResult hnf(const IntMatrix& B);

/// {x : W x = w}.
struct AffineSubspace {
  int dim = 0;
  QMatrix W;
  QVec w;
};

/// Integer points of an affine subspace as base + basis * Z^{n'}.
struct IntegerParam {
  IntVec base;
  IntMatrix basis;  ///< n x n', full column rank, lattice basis of ker(W) cap Z^n
  int reduced_dim = 0;

  IntVec map(const IntVec& z) const;
  Vec map(const Vec& z) const;
  /// z with map(z) = x, if x lies in the image over the reals.
  std::optional<Vec> preimage(const Vec& x) const;
  /// Integer z with map(z) = x, if x is one of the parametrized points.
  std::optional<IntVec> integer_preimage(const IntVec& x) const;
};

/// nullopt when the subspace holds no integer point.
std::optional<IntegerParam> integer_affine_param(const AffineSubspace& S);

/// Solves B z = r for a rational n x k matrix B of full column rank.
std::optional<Vec> solve_full_column_rank(const QMatrix& B, const Vec& r);

}  // namespace thinray
