#include "thinray/diophantine.hpp"

#include <algorithm>

#include "thinray/errors.hpp"

namespace thinray {

namespace {

struct ScanResult {
  std::int64_t best_q = 1;
  BigInt best = 0;
  BigInt second = -1;  ///< -1 when fewer than two candidates
};

/// Scans q = 1..Q for N_i / D approximations; distances are in units of 1/D.
ScanResult scan(const IntVec& N, const BigInt& D, std::int64_t Q) {
  IntVec step(N.size());
  for (std::size_t i = 0; i < N.size(); ++i) mpz_fdiv_r(step[i].get_mpz_t(), N[i].get_mpz_t(), D.get_mpz_t());
  IntVec r(N.size(), BigInt(0));
  ScanResult res;
  bool first = true;
  BigInt m;
  BigInt other;
  for (std::int64_t q = 1; q <= Q; ++q) {
    m = 0;
    for (std::size_t i = 0; i < N.size(); ++i) {
      r[i] += step[i];
      if (r[i] >= D) r[i] -= D;
      other = D - r[i];
      const BigInt& dist = r[i] < other ? r[i] : other;
      if (dist > m) m = dist;
    }
    if (first) {
      res.best = m;
      res.best_q = q;
      first = false;
    } else if (m < res.best) {
      res.second = res.best;
      res.best = m;
      res.best_q = q;
    } else if (res.second < 0 || m < res.second) {
      res.second = m;
    }
  }
  return res;
}

Rational abs_upper(const FieldElement& e, const Rational& tol) {
  if (auto r = e.as_rational()) return abs_of(*r);
  const int s = fe_sign(e);
  return s >= 0 ? fe_upper(e, tol) : fe_upper(-e, tol);
}

BigInt nearest_integer(const FieldElement& e) {
  if (auto r = e.as_rational()) return round_of(*r);
  // Irrational values are never half-integers; refine until the rounding is decided.
  for (long bits = 8;; bits *= 2) {
    const auto ap = fe_approx(e, pow2(-bits));
    const BigInt lo = round_of(ap.value - ap.err);
    const BigInt hi = round_of(ap.value + ap.err);
    if (lo == hi) return lo;
  }
}

}  // namespace

ApproxResult simultaneous_approx(const Vec& theta, std::int64_t Q) {
  if (Q < 1) throw ValidationError("simultaneous_approx needs Q >= 1");
  // Common denominator D = 2^b * lcm(rational denominators).
  QVec rationals;
  for (const auto& t : theta) {
    if (auto r = t.as_rational()) rationals.push_back(*r);
  }
  const BigInt L = lcm_of_denominators(rationals);
  const bool all_rational = rationals.size() == theta.size();

  long bits = 64;
  while ((std::int64_t{1} << std::min<long>(bits - 32, 62)) < Q && bits < 128) bits += 16;
  std::int64_t q = 1;
  for (;; bits *= 2) {
    BigInt D = L;
    if (!all_rational) mpz_mul_2exp(D.get_mpz_t(), D.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    IntVec N;
    for (const auto& t : theta) {
      if (auto r = t.as_rational()) {
        N.push_back(BigInt(*r * Rational(D)));
      } else {
        N.push_back(round_of(fe_approx(t, pow2(-bits - 2)).value * Rational(D)));
      }
    }
    const ScanResult res = scan(N, D, Q);
    q = res.best_q;
    if (all_rational || res.second < 0) break;
    // Each approximate distance is within Q * 2^-b of the exact one.
    BigInt slack = 1;
    mpz_mul_2exp(slack.get_mpz_t(), slack.get_mpz_t(), 1);
    slack *= L * BigInt(static_cast<long>(Q));
    if (res.second - res.best > slack || bits >= 1024) break;
  }

  ApproxResult out;
  out.q = q;
  out.max_err = 0;
  const FieldElement qe(static_cast<long>(q));
  for (const auto& t : theta) {
    const FieldElement qt = qe * t;
    const BigInt p = nearest_integer(qt);
    out.numerators.push_back(p);
    const Rational e = abs_upper(qt - FieldElement(p), pow2(-bits));
    if (e > out.max_err) out.max_err = e;
  }
  return out;
}

bool near_halfline(const Vec& x, const Vec& y, const Vec& d, const Rational& eps, const Rational& lambda_bar) {
  const Vec w = sub(x, y);
  const FieldElement wd = dot(w, d);
  const FieldElement dd = dot(d, d);
  if (fe_sign(wd - FieldElement(lambda_bar) * dd) < 0) return false;
  const FieldElement gap = dot(w, w) * dd - wd * wd - FieldElement(eps * eps) * dd;
  return fe_sign(gap) < 0;
}

HalflinePoint point_near_halfline(const HPolyhedron& P, const IntVec& y, const Vec& d, const Rational& eps,
                                  const Rational& lambda_bar, const std::optional<AffineSubspace>& face,
                                  const HalflineOptions& options) {
  const int n = P.dim();
  if (y.size() != static_cast<std::size_t>(n) || d.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("point_near_halfline: wrong dimension");
  }
  if (eps <= 0) throw ValidationError("point_near_halfline needs eps > 0");
  if (lambda_bar <= 0) throw ValidationError("point_near_halfline needs lambda_bar > 0");
  if (!is_ray(P, RaySpec{y, d})) throw ValidationError("point_near_halfline: (y, d) is not a ray of P");

  // Reduced coordinates: x = base + B x'. Without a face B is the identity.
  std::optional<IntegerParam> param;
  IntVec yr = y;
  Vec dr = d;
  Rational basis_norm = 1;
  if (face) {
    param = integer_affine_param(*face);
    if (!param) throw ValidationError("face contains no integer point");
    const auto yp = param->integer_preimage(y);
    if (!yp) throw ValidationError("apex does not lie in the face");
    yr = *yp;
    QMatrix B(param->basis.size(), QVec(static_cast<std::size_t>(param->reduced_dim)));
    basis_norm = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (std::size_t k = 0; k < B[i].size(); ++k) {
        B[i][k] = Rational(param->basis[i][k]);
        basis_norm += abs_of(B[i][k]);
      }
    }
    const auto dp = solve_full_column_rank(B, d);
    if (!dp) throw ValidationError("direction does not lie in the face");
    dr = *dp;
  }
  const auto lift = [&](const IntVec& xr) { return param ? param->map(xr) : xr; };
  const Vec yv = to_vec(y);

  HalflinePoint hit;
  const auto try_candidate = [&](const IntVec& zr) {
    const IntVec z = lift(zr);
    if (!contains(P, z)) {
      ++hit.membership_rejections;
      return false;
    }
    if (!near_halfline(to_vec(z), yv, d, eps, lambda_bar)) return false;
    hit.point = z;
    return true;
  };

  if (is_zero_vec(dr)) throw ValidationError("point_near_halfline needs d != 0");
  if (!common_field(dr)) {
    QVec dq;
    for (const auto& v : dr) dq.push_back(*v.as_rational());
    const IntVec p = primitive_integer(dq);
    std::size_t j = 0;
    while (dq[j] == 0) ++j;
    const Rational c = Rational(p[j]) / dq[j];  // p = c d'
    BigInt k = floor_of(lambda_bar / c) + 1;
    for (int tries = 0; tries < options.multiples_per_q; ++tries, ++k) {
      IntVec zr = yr;
      for (std::size_t i = 0; i < zr.size(); ++i) zr[i] += k * p[i];
      if (try_candidate(zr)) {
        hit.multiple = k;
        return hit;
      }
    }
    throw BudgetExhausted(static_cast<std::uint64_t>(options.q_max),
                          static_cast<std::uint64_t>(hit.membership_rejections));
  }

  const Rational reduced_dim = static_cast<long>(dr.size());
  for (std::int64_t Q = 16; Q <= options.q_max; Q *= 2) {
    const ApproxResult a = simultaneous_approx(dr, Q);
    if (std::all_of(a.numerators.begin(), a.numerators.end(), [](const BigInt& v) { return v == 0; })) continue;
    BigInt k = floor_of(lambda_bar / Rational(static_cast<long>(a.q))) + 1;
    for (int tries = 0; tries < options.multiples_per_q; ++tries, ++k) {
      // Distance to the line is at most k * |B| * sqrt(n') * max_err.
      const Rational drift = Rational(k) * basis_norm * a.max_err;
      if (drift * drift * reduced_dim >= eps * eps && tries > 0) break;
      IntVec zr = yr;
      for (std::size_t i = 0; i < zr.size(); ++i) zr[i] += k * a.numerators[i];
      if (try_candidate(zr)) {
        hit.Q = Q;
        hit.q = a.q;
        hit.multiple = k;
        return hit;
      }
    }
  }
  throw BudgetExhausted(static_cast<std::uint64_t>(options.q_max),
                        static_cast<std::uint64_t>(hit.membership_rejections));
}

}  // namespace thinray
