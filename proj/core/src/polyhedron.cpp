#include "thinray/polyhedron.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "thinray/errors.hpp"

namespace thinray {

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& A, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < A.size(); ++col) {
    std::size_t piv = row;
    while (piv < A.size() && A[piv][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[row], A[piv]);
    const Rational inv = 1 / A[row][static_cast<std::size_t>(col)];
    for (auto& v : A[row]) v *= inv;
    for (std::size_t r = 0; r < A.size(); ++r) {
      if (r == row) continue;
      const Rational f = A[r][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c < ncols; ++c) A[r][static_cast<std::size_t>(c)] -= f * A[row][static_cast<std::size_t>(c)];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of {x : A x = 0} for an m x n rational matrix.
std::vector<QVec> nullspace(QMatrix A, int n) {
  const auto pivots = rref(A, n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    QVec v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -A[r][static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void for_each_subset(std::size_t m, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                     const auto& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    for_each_subset(m, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

HPolyhedron::HPolyhedron(int n, QMatrix A, QVec b) : n_(n), A_(std::move(A)), b_(std::move(b)) {
  if (n < 0) throw DimensionMismatch("negative polyhedron dimension");
  if (A_.size() != b_.size()) throw DimensionMismatch("A and b have different row counts");
  for (const auto& row : A_) {
    if (row.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("row of A has wrong length");
  }
}

FieldElement HPolyhedron::row_dot(std::size_t i, const Vec& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw DimensionMismatch("point has wrong dimension");
  FieldElement acc;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Rational& a = A_[i][j];
    if (a == 0 || x[j].is_zero()) continue;
    acc += FieldElement(a) * x[j];
  }
  return acc;
}

Rational HPolyhedron::row_dot(std::size_t i, const IntVec& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw DimensionMismatch("point has wrong dimension");
  Rational acc = 0;
  for (std::size_t j = 0; j < x.size(); ++j) acc += A_[i][j] * Rational(x[j]);
  return acc;
}

bool contains(const HPolyhedron& P, const Vec& x) {
  if (x.size() != static_cast<std::size_t>(P.dim())) throw DimensionMismatch("contains: wrong dimension");
  for (std::size_t i = 0; i < P.rows(); ++i) {
    if (fe_sign(P.row_dot(i, x) - FieldElement(P.b()[i])) > 0) return false;
  }
  return true;
}

bool contains(const HPolyhedron& P, const IntVec& x) {
  if (x.size() != static_cast<std::size_t>(P.dim())) throw DimensionMismatch("contains: wrong dimension");
  for (std::size_t i = 0; i < P.rows(); ++i) {
    if (P.row_dot(i, x) > P.b()[i]) return false;
  }
  return true;
}

bool in_recession(const HPolyhedron& P, const Vec& d) {
  if (d.size() != static_cast<std::size_t>(P.dim())) throw DimensionMismatch("in_recession: wrong dimension");
  for (std::size_t i = 0; i < P.rows(); ++i) {
    if (fe_sign(P.row_dot(i, d)) > 0) return false;
  }
  return true;
}

bool is_ray(const HPolyhedron& P, const RaySpec& r) {
  if (r.apex.size() != static_cast<std::size_t>(P.dim()) || r.direction.size() != static_cast<std::size_t>(P.dim())) {
    return false;
  }
  return !is_zero_vec(r.direction) && contains(P, r.apex) && in_recession(P, r.direction);
}

int rank(const QMatrix& A) {
  if (A.empty()) return 0;
  QMatrix copy = A;
  return static_cast<int>(rref(copy, static_cast<int>(A.front().size())).size());
}

bool is_pointed(const HPolyhedron& P) { return rank(P.A()) == P.dim(); }

IntVec primitive_integer(const QVec& v) {
  const BigInt l = lcm_of_denominators(v);
  IntVec out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rational(v[i] * l).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

std::vector<IntVec> extreme_rays(const HPolyhedron& P) {
  const int n = P.dim();
  if (n > 4) throw DimensionTooLarge("extreme_rays supports n <= 4, got " + std::to_string(n));
  if (!is_pointed(P)) throw NotPointed("extreme_rays requires a pointed polyhedron");
  std::set<IntVec> found;
  std::vector<std::size_t> subset;
  for_each_subset(P.rows(), static_cast<std::size_t>(n - 1), subset, 0, [&](const std::vector<std::size_t>& rows) {
    QMatrix sub;
    for (auto r : rows) sub.push_back(P.A()[r]);
    const auto kernel = nullspace(sub, n);
    if (kernel.size() != 1) return;
    for (int orient : {1, -1}) {
      QVec k = kernel.front();
      for (auto& x : k) x *= orient;
      bool feasible = true;
      QMatrix tight;
      for (std::size_t i = 0; i < P.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += P.A()[i][static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
        if (s > 0) {
          feasible = false;
          break;
        }
        if (s == 0) tight.push_back(P.A()[i]);
      }
      if (feasible && rank(tight) == n - 1) found.insert(primitive_integer(k));
    }
  });
  return {found.begin(), found.end()};
}

FacetProjection facet_project(const HPolyhedron& P, const Vec& x, const Vec& d) {
  if (x.size() != static_cast<std::size_t>(P.dim()) || d.size() != static_cast<std::size_t>(P.dim())) {
    throw DimensionMismatch("facet_project: wrong dimension");
  }
  std::optional<FieldElement> best;
  std::size_t best_row = 0;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    const FieldElement ad = P.row_dot(i, d);
    if (fe_sign(ad) >= 0) continue;
    const FieldElement ratio = P.row_dot(i, x) / ad;
    if (!best || fe_sign(ratio - *best) < 0) {
      best = ratio;
      best_row = i;
    }
  }
  if (!best) throw NoBlockingRow("-d lies in the recession cone; no row blocks the direction");
  return FacetProjection{sub(x, scale(*best, d)), *best, best_row};
}

}  // namespace thinray
