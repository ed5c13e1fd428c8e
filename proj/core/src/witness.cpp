#include "thinray/witness.hpp"

#include <algorithm>

#include "thinray/errors.hpp"
#include "thinray/oracle.hpp"

namespace thinray {

namespace {

/// Rational u >= x, tightened until it has the same strict sign as x < 0.
Rational negative_upper(const FieldElement& x) {
  if (auto r = x.as_rational()) return *r;
  for (long bits = 20;; bits *= 2) {
    const Rational u = fe_upper(x, pow2(-bits));
    if (u < 0) return u;
  }
}

/// Smallest-effort lambda_bar >= 1 such that sum_i c_i lambda^i <= tau for
/// all lambda >= lambda_bar; c_k (k = degree) must be negative and c_i = 0
/// for i > k.
Rational lambda_threshold(const std::vector<FieldElement>& c, int degree, const Rational& tau) {
  const Rational lead = negative_upper(c[static_cast<std::size_t>(3 - degree)]);
  Rational spread = 0;
  for (int i = 0; i < degree; ++i) {
    Rational ub = fe_upper(c[static_cast<std::size_t>(3 - i)]);
    if (i == 0) ub -= tau;
    spread += abs_of(ub);
  }
  const Rational lb = spread / -lead;
  return lb > 1 ? lb : Rational(1);
}

}  // namespace

std::string to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::Deg3:
      return "DEG3";
    case DegreeCase::Deg2:
      return "DEG2";
    case DegreeCase::Deg1ZeroContraction:
      return "DEG1_ZERO_CONTRACTION";
    case DegreeCase::Deg1Face:
      return "DEG1_FACE";
  }
  return "DEG3";
}

ThinRayCertificate build_certificate(const CubicObjective& f, const HPolyhedron& P, const RaySpec& ray,
                                     const Rational& eps0) {
  if (!is_ray(P, ray)) throw ValidationError("build_certificate: not a ray of P");
  if (eps0 <= 0) throw ValidationError("build_certificate needs eps0 > 0");
  const Vec y = to_vec(ray.apex);
  const Vec& d = ray.direction;
  ThinRayCertificate cert;
  cert.ray = ray;
  cert.restriction = restriction(f, y, d);
  const LimitClass lc = classify_limit(cert.restriction);
  if (lc.kind != LimitKind::MinusInf) {
    throw NotUnboundedOnRay("restriction is " + to_string(lc.kind) + " along the ray");
  }
  if (lc.degree == 3) {
    cert.degree_case = DegreeCase::Deg3;
    cert.eps = eps0;
    return cert;
  }
  if (lc.degree == 2) {
    cert.degree_case = DegreeCase::Deg2;
    cert.eps = shrink_epsilon(f, y, d, eps0, ShrinkCase::Deg2);
    return cert;
  }
  cert.eps = shrink_epsilon(f, y, d, eps0, ShrinkCase::Deg1);
  const DirectionDiagnostics diag = direction_diagnostics(f, d);
  if (diag.tdd_zero) {
    cert.degree_case = DegreeCase::Deg1ZeroContraction;
    return cert;
  }
  cert.degree_case = DegreeCase::Deg1Face;

  // 3 x^T T[d,d] + M[d,d] = 0, one rational row per power of theta.
  const FieldPtr field = common_field(diag.tdd) ? common_field(diag.tdd) : diag.m2.field();
  const std::size_t powers = field ? static_cast<std::size_t>(field->degree()) : 1;
  const auto coeff = [&](const FieldElement& e, std::size_t j) {
    return j < e.coeffs().size() ? e.coeffs()[j] : Rational(0);
  };
  AffineSubspace H;
  H.dim = f.dim();
  for (std::size_t j = 0; j < powers; ++j) {
    QVec row;
    for (const auto& t : diag.tdd) row.push_back(3 * coeff(t, j));
    const Rational rhs = -coeff(diag.m2, j);
    const bool zero_row = std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
    if (zero_row) {
      if (rhs != 0) throw CertificateError("face equation is inconsistent");
      continue;
    }
    H.W.push_back(std::move(row));
    H.w.push_back(rhs);
  }
  for (std::size_t i = 0; i < H.W.size(); ++i) {
    Rational wy = 0;
    FieldElement wd;
    for (std::size_t k = 0; k < H.W[i].size(); ++k) {
      wy += H.W[i][k] * Rational(ray.apex[k]);
      wd += FieldElement(H.W[i][k]) * d[k];
    }
    if (wy != H.w[i] || !wd.is_zero()) throw CertificateError("the ray is not contained in the face H");
  }
  cert.face = std::move(H);
  return cert;
}

std::vector<FieldElement> tube_bound(const CubicObjective& f, const ThinRayCertificate& cert, const Rational& eps) {
  const PerturbationBounds b = perturbation_bounds(f, to_vec(cert.ray.apex), cert.ray.direction, eps);
  const RestrictionPoly& r = cert.restriction;
  const bool quadratic_slack = cert.degree_case == DegreeCase::Deg3 || cert.degree_case == DegreeCase::Deg2;
  return {r.a3, quadratic_slack ? r.a2 + FieldElement(b.D2) : r.a2, r.a1 + FieldElement(b.D1),
          r.a0 + FieldElement(b.D0)};
}

WitnessReport generate_witnesses(const CubicObjective& f, const HPolyhedron& P, const ThinRayCertificate& cert,
                                 const std::vector<Rational>& targets, const WitnessOptions& options) {
  for (std::size_t i = 1; i < targets.size(); ++i) {
    if (targets[i] >= targets[i - 1]) throw ValidationError("targets must be strictly decreasing");
  }
  const int degree = cert.degree_case == DegreeCase::Deg3 ? 3 : (cert.degree_case == DegreeCase::Deg2 ? 2 : 1);
  const IntegerEvaluator eval(f);
  WitnessReport rep;
  rep.q_max = options.q_max;
  rep.final_eps = cert.eps;
  Rational eps = cert.eps;

  for (const Rational& target : targets) {
    Rational tau = target;
    if (!rep.points.empty()) {
      const Rational below = Rational(floor_of(fe_lower(rep.points.back().value))) - 1;
      if (below < tau) tau = below;
    }
    for (;;) {
      const auto c = tube_bound(f, cert, eps);
      const Rational lambda_bar = lambda_threshold(c, degree, tau);
      try {
        const HalflinePoint hit = point_near_halfline(P, cert.ray.apex, cert.ray.direction, eps, lambda_bar, cert.face,
                                                      HalflineOptions{options.q_max, 64});
        rep.membership_rejections += static_cast<std::uint64_t>(hit.membership_rejections);
        if (hit.Q > rep.largest_Q) rep.largest_Q = hit.Q;
        WitnessPoint w;
        w.point = hit.point;
        w.value = eval(hit.point);
        if (compare(w.value, FieldElement(tau)) > 0) {
          throw CertificateError("witness value exceeds the certified bound");
        }
        w.value_upper = fe_upper(w.value);
        w.target = target;
        w.eps = eps;
        w.lambda_bar = lambda_bar;
        w.Q = hit.Q;
        w.q = hit.q;
        rep.points.push_back(std::move(w));
        rep.targets_met.push_back(target);
        break;
      } catch (const BudgetExhausted& e) {
        rep.membership_rejections += e.membership_rejections();
        rep.largest_Q = options.q_max;
        if (e.membership_rejections() > 0 && rep.eps_halvings < options.max_halvings) {
          eps /= 2;
          ++rep.eps_halvings;
          continue;
        }
        rep.budget_exhausted = true;
        rep.final_eps = eps;
        return rep;
      }
    }
  }
  rep.final_eps = eps;
  return rep;
}

}  // namespace thinray
