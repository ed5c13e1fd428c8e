#include "thinray/cli/report.hpp"

namespace thinray::cli {

namespace {

const char* kDecimal = "decimal_display_only";

Json optional_check(const std::optional<RayCheck>& c) {
  if (!c) return nullptr;
  return Json{{"apex", int_vec_json(c->apex)},
              {"restriction", restriction_json(c->restriction)},
              {"limit", limit_json(c->limit)}};
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Json value_json(const FieldElement& v) {
  Json j;
  j["exact"] = field_value_json(v);
  j[kDecimal] = fe_decimal(v);
  return j;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(value_json(x));
  return out;
}

Json int_vec_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json field_json(const FieldPtr& field) {
  if (!field) return "Q";
  Json j = algebraic_json(field->generator());
  j["degree"] = field->degree();
  return j;
}

Json algebraic_json(const AlgebraicReal& a) {
  Json poly = Json::array();
  for (const auto& c : a.min_poly.coeffs()) poly.push_back(to_string(c));
  Json j;
  j["min_poly"] = std::move(poly);
  j["min_poly_text"] = a.min_poly.to_string();
  j["lo"] = rational_json(a.lo);
  j["hi"] = rational_json(a.hi);
  j["irreducible"] = a.irreducible;
  const AlgebraicReal fine = a.is_rational() ? a : refine(a, pow2(-48));
  j[kDecimal] = to_decimal((fine.lo + fine.hi) / 2);
  return j;
}

Json restriction_json(const RestrictionPoly& r) {
  return Json{{"a3", value_json(r.a3)}, {"a2", value_json(r.a2)}, {"a1", value_json(r.a1)}, {"a0", value_json(r.a0)}};
}

Json limit_json(const LimitClass& c) { return Json{{"kind", to_string(c.kind)}, {"degree", c.degree}}; }

Json diagnostics_json(const DirectionDiagnostics& d) {
  Json j;
  j["T[d,d,d]"] = value_json(d.t3);
  j["T[d,d]"] = vec_json(d.tdd);
  j["M[d,d]"] = value_json(d.m2);
  j["M[d]"] = vec_json(d.md);
  j["V[d]"] = value_json(d.v1);
  j["T[d,d,d]_zero"] = d.t3_zero;
  j["T[d,d]_zero"] = d.tdd_zero;
  j["M[d,d]_zero"] = d.m2_zero;
  j["M[d]_zero"] = d.md_zero;
  j["V[d]_sign"] = fe_sign(d.v1);
  if (d.mdv) {
    j["M[d,v]"] = value_json(*d.mdv);
    j["M[d,v]_zero"] = d.mdv_zero;
  }
  if (d.tdv) {
    j["T[d,v]"] = vec_json(*d.tdv);
    j["T[d,v]_zero"] = d.tdv_zero;
  }
  return j;
}

Json curve_json(const Curve& c) {
  Json comps = Json::array();
  for (const auto& p : c.components) comps.push_back(p.to_string());
  return Json{{"components", std::move(comps)}, {"domain", Json::array({rational_json(c.lo), rational_json(c.hi)})}};
}

Json curve_scan_json(const CurveScan& s) {
  Json expanded = Json::array();
  for (const auto& c : s.expanded) expanded.push_back(field_value_json(c));
  Json roots = Json::array();
  for (const auto& r : s.roots) {
    roots.push_back(Json{{"root", algebraic_json(r.root)}, {"field", field_json(r.field)}, {"direction", vec_json(r.direction)}});
  }
  Json j;
  j["form"] = s.form == 'T' ? "T[d,d,d]" : "M[d,d]";
  j["expanded"] = std::move(expanded);
  j["search_poly"] = s.search_poly.to_string();
  j["identically_zero"] = s.identically_zero;
  j["roots"] = std::move(roots);
  j["skipped_roots"] = s.skipped_roots;
  return j;
}

Json certificate_json(const ThinRayCertificate& c) {
  Json j;
  j["apex"] = int_vec_json(c.ray.apex);
  j["direction"] = vec_json(c.ray.direction);
  j["degree_case"] = to_string(c.degree_case);
  j["epsilon"] = rational_json(c.eps);
  j["restriction"] = restriction_json(c.restriction);
  if (c.face) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.face->W.size(); ++i) {
      Json row = Json::array();
      for (const auto& v : c.face->W[i]) row.push_back(rational_json(v));
      rows.push_back(Json{{"W", std::move(row)}, {"w", rational_json(c.face->w[i])}});
    }
    j["face"] = std::move(rows);
  } else {
    j["face"] = nullptr;
  }
  return j;
}

Json witness_report_json(const WitnessReport& r) {
  Json points = Json::array();
  for (const auto& w : r.points) {
    Json p;
    p["point"] = int_vec_json(w.point);
    p["value"] = value_json(w.value);
    p["value_upper"] = rational_json(w.value_upper);
    p["target"] = rational_json(w.target);
    p["epsilon"] = rational_json(w.eps);
    p["lambda_bar"] = rational_json(w.lambda_bar);
    p["Q"] = w.Q;
    p["q"] = w.q;
    points.push_back(std::move(p));
  }
  Json met = Json::array();
  for (const auto& t : r.targets_met) met.push_back(rational_json(t));
  Json j;
  j["points"] = std::move(points);
  j["targets_met"] = std::move(met);
  j["final_epsilon"] = rational_json(r.final_eps);
  j["epsilon_halvings"] = r.eps_halvings;
  j["q_max"] = r.q_max;
  j["largest_Q"] = r.largest_Q;
  j["membership_rejections"] = r.membership_rejections;
  j["budget_exhausted"] = r.budget_exhausted;
  return j;
}

Json trend_json(const TrendReport& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.radii.size(); ++i) {
    Json row;
    row["radius"] = t.radii[i];
    row["count"] = t.counts[i];
    row["min"] = t.minima[i] ? value_json(*t.minima[i]) : Json(nullptr);
    row["argmin"] = t.argmins[i] ? int_vec_json(*t.argmins[i]) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}, {"nonincreasing", t.nonincreasing}};
}

Json analysis_json(const AnalysisReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["pointed"] = r.pointed;
  j["pieces"] = r.pieces;
  j["quadratic"] = r.quadratic;
  Json apexes = Json::array();
  for (const auto& a : r.apex_candidates) apexes.push_back(int_vec_json(a));
  j["apex_candidates"] = std::move(apexes);

  Json rays = Json::array();
  for (const auto& er : r.extreme_rays) {
    Json e;
    e["piece"] = er.piece;
    e["direction"] = int_vec_json(er.direction);
    std::size_t minus = 0;
    std::size_t plus = 0;
    std::size_t constant = 0;
    for (const auto& c : er.checks) {
      if (c.limit.kind == LimitKind::MinusInf) ++minus;
      if (c.limit.kind == LimitKind::PlusInf) ++plus;
      if (c.limit.kind == LimitKind::Constant) ++constant;
    }
    e["apexes_checked"] = er.checks.size();
    e["limits"] = Json{{"MINUS_INF", minus}, {"PLUS_INF", plus}, {"CONSTANT", constant}};
    e["restriction_at_first_apex"] = er.checks.empty() ? Json(nullptr) : restriction_json(er.checks.front().restriction);
    e["unbounded_from"] = optional_check(er.unbounded_from);
    e["plain_ray_epsilon"] = er.unbounded_from ? Json("0") : Json(nullptr);
    Json on_ray = Json::array();
    for (const auto& [z, v] : er.on_ray_points) on_ray.push_back(Json{{"point", int_vec_json(z)}, {"value", value_json(v)}});
    e["on_ray_points"] = std::move(on_ray);
    rays.push_back(std::move(e));
  }
  j["extreme_rays"] = std::move(rays);

  Json curves = Json::array();
  for (const auto& c : r.curves) curves.push_back(Json{{"curve", curve_json(c.curve)}, {"scan", curve_scan_json(c.scan)}});
  j["curves"] = std::move(curves);

  Json dirs = Json::array();
  for (const auto& d : r.directions) {
    Json e;
    e["source"] = d.source;
    e["direction"] = vec_json(d.direction);
    e["in_recession_cone"] = d.in_recession_cone;
    e["diagnostics"] = diagnostics_json(d.diagnostics);
    e["minus_inf_from"] = optional_check(d.minus_inf_from);
    e["certificate"] = d.certificate ? certificate_json(*d.certificate) : Json(nullptr);
    e["witnesses"] = d.witnesses ? witness_report_json(*d.witnesses) : Json(nullptr);
    e["note"] = d.note;
    dirs.push_back(std::move(e));
  }
  j["directions"] = std::move(dirs);

  Json steps = Json::array();
  for (const auto& s : r.quadratic_steps) {
    steps.push_back(Json{{"source", s.source},
                         {"direction", vec_json(s.direction)},
                         {"rule", s.rule},
                         {"minus_inf", s.minus_inf},
                         {"base", s.base ? int_vec_json(*s.base) : Json(nullptr)}});
  }
  j["quadratic_steps"] = std::move(steps);
  j["notes"] = r.notes;
  return j;
}

std::string point_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::vector<std::string> witness_summary(const WitnessReport& r) {
  std::vector<std::string> out;
  for (const auto& w : r.points) {
    out.push_back("witness " + point_string(w.point) + " f = " + fe_decimal(w.value) + " <= " + to_string(w.target) +
                  " (eps " + to_string(w.eps) + ")");
  }
  if (r.budget_exhausted) out.push_back("budget exhausted at Q = " + std::to_string(r.q_max));
  return out;
}

std::vector<std::string> trend_summary(const TrendReport& t) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < t.radii.size(); ++i) {
    std::string line = "radius " + std::to_string(t.radii[i]) + ": ";
    if (t.minima[i]) {
      line += "min " + fe_decimal(*t.minima[i]) + " at " + point_string(*t.argmins[i]);
    } else {
      line += "no integer point";
    }
    line += ", " + std::to_string(t.counts[i]) + " points";
    out.push_back(std::move(line));
  }
  out.push_back(t.nonincreasing ? "minima nonincreasing" : "minima not monotone");
  return out;
}

std::vector<std::string> analysis_summary(const AnalysisReport& r) {
  std::vector<std::string> out;
  out.push_back("verdict: " + to_string(r.verdict));
  for (const auto& er : r.extreme_rays) {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : er.checks) ++counts[static_cast<int>(c.limit.kind)];
    std::string line = "extreme ray " + point_string(er.direction) + ": ";
    if (er.unbounded_from) {
      line += "MINUS_INF from " + point_string(er.unbounded_from->apex) + " (plain ray, eps 0)";
    } else if (counts[1] == er.checks.size()) {
      line += "PLUS_INF from all " + std::to_string(er.checks.size()) + " apexes";
    } else {
      line += "PLUS_INF " + std::to_string(counts[1]) + ", CONSTANT " + std::to_string(counts[2]) + " of " +
              std::to_string(er.checks.size()) + " apexes";
    }
    out.push_back(std::move(line));
  }
  for (const auto& d : r.directions) {
    std::string line = d.source + ": ";
    if (!d.in_recession_cone) {
      line += d.note;
    } else if (d.certificate) {
      line += to_string(d.certificate->degree_case) + ", eps " + to_string(d.certificate->eps);
    } else if (d.minus_inf_from) {
      line += "MINUS_INF, " + d.note;
    } else {
      line += "no apex with MINUS_INF";
    }
    out.push_back(line);
    if (d.witnesses) {
      for (auto& w : witness_summary(*d.witnesses)) out.push_back("  " + w);
    }
  }
  for (const auto& s : r.quadratic_steps) out.push_back(s.source + ": " + s.rule);
  for (const auto& n : r.notes) out.push_back("note: " + n);
  return out;
}

}  // namespace thinray::cli
