#include "thinray/lattice.hpp"

#include <utility>

#include "thinray/errors.hpp"

namespace thinray {

namespace {

void column_combine(IntMatrix& M, int c, int j, const BigInt& s, const BigInt& t, const BigInt& u, const BigInt& v) {
  // (col_c, col_j) <- (s col_c + t col_j, u col_c + v col_j)
  for (auto& row : M) {
    const BigInt a = row[static_cast<std::size_t>(c)];
    const BigInt b = row[static_cast<std::size_t>(j)];
    row[static_cast<std::size_t>(c)] = s * a + t * b;
    row[static_cast<std::size_t>(j)] = u * a + v * b;
  }
}

void column_axpy(IntMatrix& M, int dst, int src, const BigInt& factor) {
  for (auto& row : M) row[static_cast<std::size_t>(dst)] -= factor * row[static_cast<std::size_t>(src)];
}

void column_negate(IntMatrix& M, int c) {
  for (auto& row : M) row[static_cast<std::size_t>(c)] = -row[static_cast<std::size_t>(c)];
}

IntMatrix columns(const IntMatrix& M, int from, int to) {
  IntMatrix out(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    out[i].assign(M[i].begin() + from, M[i].begin() + to);
  }
  return out;
}

}  // namespace

IntMatrix identity_matrix(int n) {
  IntMatrix I(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), BigInt(0)));
  for (int i = 0; i < n; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return I;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
  if (A.empty()) return {};
  const std::size_t inner = A.front().size();
  if (B.size() != inner) throw DimensionMismatch("multiply: inner dimensions differ");
  const std::size_t cols = B.empty() ? 0 : B.front().size();
  IntMatrix C(A.size(), IntVec(cols, BigInt(0)));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  }
  return C;
}

BigInt determinant(const IntMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  IntMatrix M = A;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && M[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

HnfResult hnf(const IntMatrix& B) { return hnf(B, B.empty() ? 0 : static_cast<int>(B.front().size())); }

HnfResult hnf(const IntMatrix& B, int ncols) {
  HnfResult res{B, identity_matrix(ncols), 0};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  int c = 0;
  for (std::size_t r = 0; r < H.size() && c < ncols; ++r) {
    for (int j = c + 1; j < ncols; ++j) {
      const BigInt b = H[r][static_cast<std::size_t>(j)];
      if (b == 0) continue;
      const BigInt a = H[r][static_cast<std::size_t>(c)];
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt u = -b / g;
      const BigInt v = a / g;
      column_combine(H, c, j, s, t, u, v);
      column_combine(U, c, j, s, t, u, v);
    }
    const BigInt pivot = H[r][static_cast<std::size_t>(c)];
    if (pivot == 0) continue;
    if (pivot < 0) {
      column_negate(H, c);
      column_negate(U, c);
    }
    const BigInt p = H[r][static_cast<std::size_t>(c)];
    for (int j = 0; j < c; ++j) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), H[r][static_cast<std::size_t>(j)].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      column_axpy(H, j, c, q);
      column_axpy(U, j, c, q);
    }
    ++c;
  }
  res.rank = c;
  return res;
}

// ---------------------------------------------------------------- IntegerParam

IntVec IntegerParam::map(const IntVec& z) const {
  if (z.size() != static_cast<std::size_t>(reduced_dim)) throw DimensionMismatch("IntegerParam::map: wrong dimension");
  IntVec x = base;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < z.size(); ++k) x[i] += basis[i][k] * z[k];
  }
  return x;
}

Vec IntegerParam::map(const Vec& z) const {
  if (z.size() != static_cast<std::size_t>(reduced_dim)) throw DimensionMismatch("IntegerParam::map: wrong dimension");
  Vec x = to_vec(base);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (basis[i][k] == 0) continue;
      x[i] += FieldElement(basis[i][k]) * z[k];
    }
  }
  return x;
}

std::optional<Vec> IntegerParam::preimage(const Vec& x) const {
  QMatrix B(basis.size(), QVec(static_cast<std::size_t>(reduced_dim)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(reduced_dim); ++k) B[i][k] = Rational(basis[i][k]);
  }
  return solve_full_column_rank(B, sub(x, to_vec(base)));
}

std::optional<IntVec> IntegerParam::integer_preimage(const IntVec& x) const {
  const auto z = preimage(to_vec(x));
  if (!z) return std::nullopt;
  IntVec out;
  for (const auto& v : *z) {
    const auto r = v.as_rational();
    if (!r || r->get_den() != 1) return std::nullopt;
    out.push_back(r->get_num());
  }
  return out;
}

std::optional<Vec> solve_full_column_rank(const QMatrix& B, const Vec& r) {
  const std::size_t n = B.size();
  if (r.size() != n) throw DimensionMismatch("solve: right-hand side has wrong length");
  const std::size_t k = n == 0 ? 0 : B.front().size();
  QMatrix A = B;
  Vec rhs = r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = row;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw ValidationError("solve: matrix lacks full column rank");
    std::swap(A[row], A[piv]);
    std::swap(rhs[row], rhs[piv]);
    const Rational inv = 1 / A[row][col];
    for (auto& v : A[row]) v *= inv;
    rhs[row] *= FieldElement(inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || A[i][col] == 0) continue;
      const Rational f = A[i][col];
      for (std::size_t c = 0; c < k; ++c) A[i][c] -= f * A[row][c];
      rhs[i] -= FieldElement(f) * rhs[row];
    }
    ++row;
  }
  for (std::size_t i = k; i < n; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  return Vec(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(k));
}

std::optional<IntegerParam> integer_affine_param(const AffineSubspace& S) {
  const int n = S.dim;
  if (S.W.size() != S.w.size()) throw DimensionMismatch("affine subspace: W and w row counts differ");
  for (const auto& row : S.W) {
    if (row.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("affine subspace: row of W has wrong length");
  }
  const std::size_t l = S.W.size();
  if (l == 0) return IntegerParam{IntVec(static_cast<std::size_t>(n), BigInt(0)), identity_matrix(n), n};

  // Integer system B x = c, row-wise scaled by the lcm of denominators.
  IntMatrix B(l);
  IntVec c(l);
  for (std::size_t i = 0; i < l; ++i) {
    QVec row = S.W[i];
    row.push_back(S.w[i]);
    const BigInt m = lcm_of_denominators(row);
    for (const auto& v : S.W[i]) B[i].push_back(Rational(v * m).get_num());
    c[i] = Rational(S.w[i] * m).get_num();
  }

  const HnfResult h = hnf(B, n);
  const int r = h.rank;
  // Forward substitution on the echelon part of H.
  IntVec v;
  for (std::size_t i = 0; i < l; ++i) {
    BigInt s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += h.H[i][k] * v[k];
    const bool has_pivot = static_cast<int>(v.size()) < r && h.H[i][v.size()] != 0;
    if (has_pivot) {
      const BigInt& p = h.H[i][v.size()];
      const BigInt rest = c[i] - s;
      if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) == 0) return std::nullopt;
      v.push_back(rest / p);
    } else if (s != c[i]) {
      return std::nullopt;
    }
  }

  IntVec base(static_cast<std::size_t>(n), BigInt(0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k) base[i] += h.U[i][k] * v[k];
  }

  // Canonical lattice basis of the integer kernel, then a reduced base point.
  const IntMatrix kernel = columns(h.U, r, n);
  const int kdim = n - r;
  IntMatrix basis = kdim > 0 ? hnf(kernel, kdim).H : IntMatrix(static_cast<std::size_t>(n));
  std::size_t pivot_row = 0;
  for (int k = 0; k < kdim; ++k) {
    while (basis[pivot_row][static_cast<std::size_t>(k)] == 0) ++pivot_row;
    const BigInt& hk = basis[pivot_row][static_cast<std::size_t>(k)];
    Rational ratio(base[pivot_row], hk);
    ratio.canonicalize();
    const BigInt m = floor_of(ratio + Rational(1, 2));
    if (m != 0) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) base[i] -= m * basis[i][static_cast<std::size_t>(k)];
    }
    ++pivot_row;
  }
  return IntegerParam{std::move(base), std::move(basis), kdim};
}

}  // namespace thinray
