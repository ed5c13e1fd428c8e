#include "thinray/analyze.hpp"

#include "thinray/errors.hpp"
#include "thinray/oracle.hpp"

namespace thinray {

namespace {

std::vector<HPolyhedron> orthant_pieces(const HPolyhedron& P) {
  const int n = P.dim();
  std::vector<HPolyhedron> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    QMatrix A = P.A();
    QVec b = P.b();
    for (int i = 0; i < n; ++i) {
      QVec row(static_cast<std::size_t>(n), Rational(0));
      row[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? 1 : -1;
      A.push_back(std::move(row));
      b.emplace_back(0);
    }
    out.emplace_back(n, std::move(A), std::move(b));
  }
  return out;
}

RayCheck check_ray(const CubicObjective& f, const IntVec& apex, const Vec& d) {
  RayCheck c;
  c.apex = apex;
  c.restriction = restriction(f, to_vec(apex), d);
  c.limit = classify_limit(c.restriction);
  return c;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedUnbounded:
      return "certified unbounded";
    case Verdict::CertifiedBoundedAlongCheckedRays:
      return "certified bounded along all checked rays";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

AnalysisReport analyze(const CubicObjective& f, const HPolyhedron& P, const std::vector<Vec>& extra_directions,
                       const std::vector<Curve>& extra_curves, const AnalyzeOptions& options) {
  if (f.dim() != P.dim()) throw DimensionMismatch("objective and polyhedron dimensions differ");
  const int n = P.dim();
  AnalysisReport rep;
  rep.quadratic = f.T.is_zero();
  rep.pointed = is_pointed(P);
  const std::vector<HPolyhedron> pieces = rep.pointed ? std::vector<HPolyhedron>{P} : orthant_pieces(P);
  rep.pieces = pieces.size();
  if (!rep.pointed) rep.notes.push_back("P is not pointed; split into " + std::to_string(pieces.size()) + " orthant pieces");

  const IntVec origin(static_cast<std::size_t>(n), BigInt(0));
  if (contains(P, origin)) rep.apex_candidates.push_back(origin);
  for_each_point(P, options.apex_radius, [&](const IntVec& x) {
    if (x != origin) rep.apex_candidates.push_back(x);
  });
  if (rep.apex_candidates.empty()) {
    rep.notes.push_back("no integer point of P within radius " + std::to_string(options.apex_radius));
  }

  bool unbounded = false;
  bool checked_any = false;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::vector<IntVec> rays;
    try {
      rays = extreme_rays(pieces[k]);
    } catch (const DimensionTooLarge& e) {
      rep.notes.push_back(e.what());
      continue;
    }
    for (const auto& r : rays) {
      ExtremeRayReport er;
      er.piece = k;
      er.direction = r;
      const Vec d = to_vec(r);
      for (const auto& y : rep.apex_candidates) {
        if (!contains(pieces[k], y)) continue;
        RayCheck c = check_ray(f, y, d);
        checked_any = true;
        if (c.limit.kind == LimitKind::MinusInf && !er.unbounded_from) {
          er.unbounded_from = c;
          const IntegerEvaluator eval(f);
          for (long step = 1; step <= 10; ++step) {
            IntVec z = y;
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += step * r[i];
            er.on_ray_points.emplace_back(z, eval(z));
          }
          unbounded = true;
        }
        er.checks.push_back(std::move(c));
      }
      rep.extreme_rays.push_back(std::move(er));
    }
  }

  const auto process_direction = [&](const std::string& source, const Vec& d) {
    DirectionReport dr;
    dr.source = source;
    dr.direction = d;
    dr.diagnostics = direction_diagnostics(f, d);
    dr.in_recession_cone = !is_zero_vec(d) && in_recession(P, d);
    if (!dr.in_recession_cone) {
      dr.note = "not a nonzero direction of rec(P)";
      return dr;
    }
    for (const auto& y : rep.apex_candidates) {
      RayCheck c = check_ray(f, y, d);
      checked_any = true;
      if (c.limit.kind != LimitKind::MinusInf) continue;
      dr.minus_inf_from = c;
      unbounded = true;
      try {
        dr.certificate = build_certificate(f, P, RaySpec{y, d}, options.eps0);
        if (options.generate_witnesses && !options.targets.empty()) {
          dr.witnesses = generate_witnesses(f, P, *dr.certificate, options.targets, options.witness);
        }
      } catch (const Error& e) {
        dr.note = e.what();
      }
      break;
    }
    return dr;
  };

  for (std::size_t i = 0; i < extra_directions.size(); ++i) {
    rep.directions.push_back(process_direction("direction " + std::to_string(i + 1), extra_directions[i]));
  }
  for (std::size_t i = 0; i < extra_curves.size(); ++i) {
    CurveReport cr{extra_curves[i], curve_critical_directions(f, extra_curves[i])};
    for (std::size_t j = 0; j < cr.scan.roots.size(); ++j) {
      rep.directions.push_back(process_direction(
          "curve " + std::to_string(i + 1) + " root " + std::to_string(j + 1), cr.scan.roots[j].direction));
    }
    rep.curves.push_back(std::move(cr));
  }

  if (rep.quadratic) {
    std::vector<std::pair<std::string, Vec>> candidates;
    for (std::size_t k = 0; k < rep.extreme_rays.size(); ++k) {
      candidates.emplace_back("extreme ray " + std::to_string(k + 1), to_vec(rep.extreme_rays[k].direction));
    }
    for (const auto& dr : rep.directions) {
      if (dr.in_recession_cone) candidates.emplace_back(dr.source, dr.direction);
    }
    for (const auto& [source, d] : candidates) {
      const DirectionDiagnostics g = direction_diagnostics(f, d);
      QuadraticStep step;
      step.source = source;
      step.direction = d;
      const int s = fe_sign(g.m2);
      if (s < 0) {
        step.rule = "M[d,d] < 0";
        step.minus_inf = !rep.apex_candidates.empty();
      } else if (s > 0) {
        step.rule = "M[d,d] > 0";
      } else if (g.md_zero) {
        if (fe_sign(g.v1) < 0) {
          step.rule = "M[d,d] = 0, M[d] = 0, V[d] < 0";
          step.minus_inf = !rep.apex_candidates.empty();
        } else {
          step.rule = "M[d,d] = 0, M[d] = 0, V[d] >= 0";
        }
      } else {
        step.rule = "M[d,d] = 0, M[d] != 0, no base z with 2 z^T M[d] + V[d] < 0 within radius";
        for (const auto& z : rep.apex_candidates) {
          const FieldElement slope = FieldElement(2) * dot(to_vec(z), g.md) + g.v1;
          if (fe_sign(slope) < 0) {
            step.rule = "M[d,d] = 0, M[d] != 0, 2 z^T M[d] + V[d] < 0";
            step.minus_inf = true;
            step.base = z;
            break;
          }
        }
      }
      if (step.minus_inf && !step.base) step.base = rep.apex_candidates.front();
      if (step.minus_inf) unbounded = true;
      rep.quadratic_steps.push_back(std::move(step));
    }
  }

  if (unbounded) {
    rep.verdict = Verdict::CertifiedUnbounded;
  } else if (checked_any) {
    rep.verdict = Verdict::CertifiedBoundedAlongCheckedRays;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

}  // namespace thinray
