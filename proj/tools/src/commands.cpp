#include "thinray/cli/commands.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "thinray/cli/builtins.hpp"
#include "thinray/cli/report.hpp"
#include "thinray/diophantine.hpp"
#include "thinray/errors.hpp"

namespace thinray::cli {

namespace {

struct Flags {
  std::string problem;
  std::string epsilon = "1/2";
  std::string targets = "-10,-100,-1000";
  std::int64_t q_max = std::int64_t{1} << 20;
  std::string radii = "2,5,10,20";
  long radius = 4;
  std::string apex;
  std::vector<std::string> directions;
  std::string curve;
  std::string domain;
  int root = 1;
  bool no_witnesses = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s, const char* flag) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const ParseError& e) {
      throw ParseError(std::string(flag) + ": " + e.what());
    }
  }
  return out;
}

std::vector<long> parse_longs(const std::string& s, const char* flag) {
  std::vector<long> out;
  for (const auto& r : parse_rationals(s, flag)) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ValidationError(std::string(flag) + ": expected integers");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

Rational parse_epsilon(const Flags& f) {
  const auto v = parse_rationals(f.epsilon, "--epsilon");
  if (v.size() != 1 || v[0] <= 0) throw ValidationError("--epsilon must be a single positive rational");
  return v[0];
}

std::vector<Rational> parse_targets(const Flags& f) {
  auto t = parse_rationals(f.targets, "--targets");
  if (t.empty()) throw ValidationError("--targets is empty");
  return t;
}

Vec parse_direction(const std::string& text, const ProblemFile& p) {
  Vec d;
  for (const auto& part : split(text, ',')) d.push_back(parse_field_expression(part, p.field));
  if (d.size() != static_cast<std::size_t>(p.dimension)) {
    throw ValidationError("--direction: expected " + std::to_string(p.dimension) + " entries");
  }
  return d;
}

Curve parse_curve(const Flags& f, const ProblemFile& p) {
  Curve c;
  for (const auto& part : split(f.curve, ';')) c.components.push_back(parse_int_polynomial(part, 't'));
  if (c.components.size() != static_cast<std::size_t>(p.dimension)) {
    throw ValidationError("--curve: expected " + std::to_string(p.dimension) + " components");
  }
  if (f.domain.empty()) throw ValidationError("--curve needs --domain lo,hi");
  const auto dom = parse_rationals(f.domain, "--domain");
  if (dom.size() != 2 || dom[0] > dom[1]) throw ValidationError("--domain: expected lo,hi with lo <= hi");
  c.lo = dom[0];
  c.hi = dom[1];
  return c;
}

struct ResolvedRay {
  RaySpec ray;
  std::string source;
  std::optional<CurveReport> curve;
};

ResolvedRay resolve_ray(const Flags& f, const ProblemFile& p) {
  ResolvedRay r;
  if (f.apex.empty()) {
    r.ray.apex.assign(static_cast<std::size_t>(p.dimension), BigInt(0));
  } else {
    for (const long v : parse_longs(f.apex, "--apex")) r.ray.apex.emplace_back(v);
    if (r.ray.apex.size() != static_cast<std::size_t>(p.dimension)) {
      throw ValidationError("--apex: expected " + std::to_string(p.dimension) + " entries");
    }
  }
  if (f.directions.size() > 1) throw ValidationError("--direction given more than once");
  if (!f.directions.empty()) {
    r.ray.direction = parse_direction(f.directions.front(), p);
    r.source = "--direction";
    return r;
  }
  std::optional<Curve> curve;
  if (!f.curve.empty()) {
    curve = parse_curve(f, p);
    r.source = "--curve";
  } else if (!p.directions.empty()) {
    r.ray.direction = p.directions.front();
    r.source = "problem direction 1";
    return r;
  } else if (!p.curves.empty()) {
    curve = p.curves.front();
    r.source = "problem curve 1";
  } else {
    throw ValidationError("no direction: pass --direction or --curve");
  }
  CurveReport cr{*curve, curve_critical_directions(p.objective, *curve)};
  if (f.root < 1 || static_cast<std::size_t>(f.root) > cr.scan.roots.size()) {
    throw ValidationError("--root " + std::to_string(f.root) + " but the curve has " +
                          std::to_string(cr.scan.roots.size()) + " critical direction(s)");
  }
  r.ray.direction = cr.scan.roots[static_cast<std::size_t>(f.root - 1)].direction;
  r.source += " root " + std::to_string(f.root);
  r.curve = std::move(cr);
  return r;
}

Json document(const std::string& command, const Flags& f, const ProblemFile& p) {
  Json doc;
  doc["command"] = command;
  doc["problem"] = f.problem;
  doc["dimension"] = p.dimension;
  doc["field"] = field_json(p.field);
  doc["status"] = "ok";
  return doc;
}

void emit(Json doc, const std::vector<std::string>& summary, std::ostream& out, std::ostream& err) {
  doc["summary"] = summary;
  out << doc.dump(2) << "\n";
  for (const auto& line : summary) err << line << "\n";
}

WitnessOptions witness_options(const Flags& f) {
  if (f.q_max < 1) throw ValidationError("--q-max must be positive");
  WitnessOptions w;
  w.q_max = f.q_max;
  return w;
}

int cmd_analyze(const Flags& f, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem_or_builtin(f.problem);
  std::vector<Vec> dirs = p.directions;
  for (const auto& d : f.directions) dirs.push_back(parse_direction(d, p));
  std::vector<Curve> curves = p.curves;
  if (!f.curve.empty()) curves.push_back(parse_curve(f, p));
  AnalyzeOptions opt;
  if (f.radius < 0) throw ValidationError("--radius must be nonnegative");
  opt.apex_radius = f.radius;
  opt.eps0 = parse_epsilon(f);
  opt.targets = parse_targets(f);
  opt.witness = witness_options(f);
  opt.generate_witnesses = !f.no_witnesses;
  const AnalysisReport rep = analyze(p.objective, p.polyhedron, dirs, curves, opt);
  bool budget = false;
  for (const auto& d : rep.directions) budget = budget || (d.witnesses && d.witnesses->budget_exhausted);
  Json doc = document("analyze", f, p);
  if (budget) doc["status"] = "budget_exhausted";
  doc["result"] = analysis_json(rep);
  emit(std::move(doc), analysis_summary(rep), out, err);
  return budget ? kExitBudget : kExitOk;
}

int cmd_witness(const Flags& f, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem_or_builtin(f.problem);
  const ResolvedRay r = resolve_ray(f, p);
  const ThinRayCertificate cert = build_certificate(p.objective, p.polyhedron, r.ray, parse_epsilon(f));
  const WitnessReport w = generate_witnesses(p.objective, p.polyhedron, cert, parse_targets(f), witness_options(f));
  Json doc = document("witness", f, p);
  if (w.budget_exhausted) doc["status"] = "budget_exhausted";
  Json result;
  result["source"] = r.source;
  result["curve"] = r.curve ? curve_scan_json(r.curve->scan) : Json(nullptr);
  result["certificate"] = certificate_json(cert);
  result["witnesses"] = witness_report_json(w);
  doc["result"] = std::move(result);
  std::vector<std::string> summary{"certificate " + to_string(cert.degree_case) + ", eps " + to_string(cert.eps)};
  for (auto& line : witness_summary(w)) summary.push_back(std::move(line));
  emit(std::move(doc), summary, out, err);
  return w.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_verify_ray(const Flags& f, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem_or_builtin(f.problem);
  const ResolvedRay r = resolve_ray(f, p);
  if (!is_ray(p.polyhedron, r.ray)) throw ValidationError("apex not in P or direction not in rec(P)");
  const RestrictionPoly rp = restriction(p.objective, to_vec(r.ray.apex), r.ray.direction);
  const LimitClass lc = classify_limit(rp);
  const DirectionDiagnostics diag = direction_diagnostics(p.objective, r.ray.direction);
  Json doc = document("verify-ray", f, p);
  Json result;
  result["source"] = r.source;
  result["curve"] = r.curve ? curve_scan_json(r.curve->scan) : Json(nullptr);
  result["apex"] = int_vec_json(r.ray.apex);
  result["direction"] = vec_json(r.ray.direction);
  result["restriction"] = restriction_json(rp);
  result["limit"] = limit_json(lc);
  result["diagnostics"] = diagnostics_json(diag);
  doc["result"] = std::move(result);
  std::string line = to_string(lc.kind) + ", degree " + std::to_string(lc.degree);
  if (diag.tdd_zero) line += ", T[d,d] = 0 componentwise";
  emit(std::move(doc), {line}, out, err);
  return kExitOk;
}

int cmd_enumerate(const Flags& f, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem_or_builtin(f.problem);
  const std::vector<long> radii = parse_longs(f.radii, "--radii");
  for (const long r : radii) {
    if (r < 0) throw ValidationError("--radii must be nonnegative");
  }
  const TrendReport t = trend(p.objective, p.polyhedron, radii);
  Json doc = document("enumerate", f, p);
  doc["result"] = trend_json(t);
  emit(std::move(doc), trend_summary(t), out, err);
  return kExitOk;
}

struct Fact {
  std::string name;
  bool holds;
};

int cmd_reproduce(const Flags& f, std::ostream& out, std::ostream& err) {
  if (!builtin_text(f.problem)) {
    std::string names;
    for (const auto& b : builtins()) names += (names.empty() ? "" : ", ") + std::string(b.name);
    throw ValidationError("unknown example '" + f.problem + "' (expected one of: " + names + ")");
  }
  const ProblemFile p = load_problem_or_builtin(f.problem);
  AnalyzeOptions opt;
  opt.eps0 = parse_epsilon(f);
  opt.targets = parse_targets(f);
  opt.witness = witness_options(f);
  const AnalysisReport rep = analyze(p.objective, p.polyhedron, {}, p.curves, opt);

  std::vector<Fact> facts;
  const bool cubic = !p.objective.T.is_zero();
  const bool one_root = rep.curves.size() == 1 && rep.curves.front().scan.roots.size() == 1;
  facts.push_back({"the curve has exactly one critical direction", one_root});
  const DirectionReport* dr = nullptr;
  for (const auto& d : rep.directions) {
    if (!dr && d.source.rfind("curve 1 root 1", 0) == 0) dr = &d;
  }
  bool budget = false;
  if (one_root && dr) {
    const FieldPtr& field = rep.curves.front().scan.roots.front().field;
    const DirectionDiagnostics& g = dr->diagnostics;
    if (cubic) {
      facts.push_back({"T[d,d,d] = 0", g.t3_zero});
      facts.push_back({"T[d,d] = 0", g.tdd_zero});
    }
    facts.push_back({"M[d,d] = 0", g.m2_zero});
    facts.push_back({"V[d] = -theta", field && g.v1 == -FieldElement::generator(field)});
    facts.push_back({"V[d] < 0", fe_sign(g.v1) < 0});
    facts.push_back({"d lies in rec(P)", dr->in_recession_cone});
    facts.push_back({"thin-ray certificate", dr->certificate.has_value()});
    bool all_plus = !rep.extreme_rays.empty();
    for (const auto& er : rep.extreme_rays) {
      for (const auto& c : er.checks) all_plus = all_plus && c.limit.kind == LimitKind::PlusInf;
    }
    facts.push_back({"every extreme ray is PLUS_INF from every apex", all_plus});
    bool witnesses_ok = dr->witnesses && dr->witnesses->points.size() == opt.targets.size();
    if (dr->witnesses) {
      budget = dr->witnesses->budget_exhausted;
      for (const auto& w : dr->witnesses->points) {
        witnesses_ok = witnesses_ok && contains(p.polyhedron, w.point) &&
                       near_halfline(to_vec(w.point), to_vec(dr->certificate->ray.apex), dr->certificate->ray.direction, w.eps, 0) &&
                       w.eps <= opt.eps0 && compare(w.value, FieldElement(w.target)) <= 0;
      }
    }
    facts.push_back({"a witness in P within eps of the ray for every target", witnesses_ok});
  }

  bool all = true;
  Json fj = Json::array();
  std::vector<std::string> summary{"verdict: " + to_string(rep.verdict)};
  for (const auto& fact : facts) {
    all = all && fact.holds;
    fj.push_back(Json{{"fact", fact.name}, {"holds", fact.holds}});
    summary.push_back(std::string(fact.holds ? "[ok] " : "[FAILED] ") + fact.name);
  }
  if (dr && dr->witnesses) {
    for (auto& line : witness_summary(*dr->witnesses)) summary.push_back(std::move(line));
  }
  Json doc = document("reproduce", f, p);
  doc["status"] = budget ? "budget_exhausted" : (all ? "ok" : "facts_failed");
  doc["facts"] = std::move(fj);
  doc["result"] = analysis_json(rep);
  emit(std::move(doc), summary, out, err);
  if (budget) return kExitBudget;
  return all ? kExitOk : kExitFailure;
}

int error_exit(const std::string& command, const std::string& kind, const std::string& message, int code,
               std::ostream& out, std::ostream& err) {
  Json doc;
  doc["command"] = command;
  doc["status"] = "error";
  doc["error"] = Json{{"kind", kind}, {"message", message}, {"exit_code", code}};
  out << doc.dump(2) << "\n";
  err << "error: " << message << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact unboundedness certificates for cubic integer programs", "thinray"};
  app.require_subcommand(1);
  Flags flags;

  const auto add_problem = [&](CLI::App* sub, const char* what) {
    sub->add_option("problem", flags.problem, what)->required();
  };
  const auto add_witness_flags = [&](CLI::App* sub) {
    sub->add_option("--epsilon", flags.epsilon, "initial tube radius p/q")->capture_default_str();
    sub->add_option("--targets", flags.targets, "strictly decreasing values t1,t2,...")->capture_default_str();
    sub->add_option("--q-max", flags.q_max, "approximation budget")->capture_default_str();
  };
  const auto add_ray_flags = [&](CLI::App* sub) {
    sub->add_option("--apex", flags.apex, "integer apex x1,x2,... (default origin)");
    sub->add_option("--direction", flags.directions, "direction d1,d2,... (p/q or polynomials in t)");
    sub->add_option("--curve", flags.curve, "curve components \"p1(t);p2(t);...\"");
    sub->add_option("--domain", flags.domain, "curve domain lo,hi");
    sub->add_option("--root,--curve-root", flags.root, "critical direction index on the curve (1-based)")
        ->capture_default_str();
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze extreme rays, directions and curves");
  add_problem(analyze_cmd, "builtin name or problem file");
  add_witness_flags(analyze_cmd);
  analyze_cmd->add_option("--radius", flags.radius, "apex candidate box radius")->capture_default_str();
  analyze_cmd->add_option("--direction", flags.directions, "extra direction d1,d2,... (repeatable)");
  analyze_cmd->add_option("--curve", flags.curve, "extra curve \"p1(t);p2(t);...\"");
  analyze_cmd->add_option("--domain", flags.domain, "curve domain lo,hi");
  analyze_cmd->add_flag("--no-witnesses", flags.no_witnesses, "skip witness generation");

  CLI::App* witness_cmd = app.add_subcommand("witness", "integer points near a thin ray");
  add_problem(witness_cmd, "builtin name or problem file");
  add_witness_flags(witness_cmd);
  add_ray_flags(witness_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify-ray", "restriction and limit along one ray");
  add_problem(verify_cmd, "builtin name or problem file");
  add_ray_flags(verify_cmd);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "brute-force minima over growing boxes");
  add_problem(enumerate_cmd, "builtin name or problem file");
  enumerate_cmd->add_option("--radii,--radius", flags.radii, "strictly increasing radii r1,r2,...")
      ->capture_default_str();

  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "run the full pipeline on a bundled example");
  add_problem(reproduce_cmd, "cubic-example or quadratic-example");
  add_witness_flags(reproduce_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (sub == analyze_cmd) return cmd_analyze(flags, out, err);
    if (sub == witness_cmd) return cmd_witness(flags, out, err);
    if (sub == verify_cmd) return cmd_verify_ray(flags, out, err);
    if (sub == enumerate_cmd) return cmd_enumerate(flags, out, err);
    return cmd_reproduce(flags, out, err);
  } catch (const BudgetExhausted& e) {
    return error_exit(command, "BudgetExhausted", e.what(), kExitBudget, out, err);
  } catch (const ParseError& e) {
    return error_exit(command, "ParseError", e.what(), kExitUsage, out, err);
  } catch (const ValidationError& e) {
    return error_exit(command, "ValidationError", e.what(), kExitUsage, out, err);
  } catch (const DimensionMismatch& e) {
    return error_exit(command, "DimensionMismatch", e.what(), kExitUsage, out, err);
  } catch (const NotUnboundedOnRay& e) {
    return error_exit(command, "NotUnboundedOnRay", e.what(), kExitUsage, out, err);
  } catch (const MismatchedField& e) {
    return error_exit(command, "MismatchedField", e.what(), kExitUsage, out, err);
  } catch (const DivisionByZero& e) {
    return error_exit(command, "DivisionByZero", e.what(), kExitUsage, out, err);
  } catch (const DimensionTooLarge& e) {
    return error_exit(command, "DimensionTooLarge", e.what(), kExitUsage, out, err);
  } catch (const std::exception& e) {
    return error_exit(command, "InternalError", e.what(), kExitFailure, out, err);
  }
}

}  // namespace thinray::cli
