// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "oracles.hpp"
#include "thinray/analyze.hpp"
#include "thinray/cli/commands.hpp"
#include "thinray/cli/problem.hpp"
#include "thinray/diophantine.hpp"
#include "thinray/errors.hpp"
#include "thinray/lattice.hpp"
#include "thinray/oracle.hpp"
#include "thinray/witness.hpp"

using namespace thinray;
using namespace fixtures;
using Json = thinray::cli::Json;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

const oracle::Modulus kCubicMod{{-2, 0, 0, 1}};
const oracle::QV kCubicMinpoly = {-2, 0, 0, 1};
const oracle::Modulus kQuadMod{{-2, 0, 1}};
const oracle::QV kQuadMinpoly = {-2, 0, 1};
const oracle::RootBox kBox{1, 2};

std::vector<oracle::Qt> cubic_ref_direction() {
  const oracle::Qt t = oracle::qt_gen(kCubicMod);
  return {t, oracle::mul(t, t, kCubicMod), oracle::qt_const(1, kCubicMod)};
}

std::vector<oracle::Qt> quadratic_ref_direction() { return {oracle::qt_gen(kQuadMod), oracle::qt_const(1, kQuadMod)}; }

oracle::Qt quadratic_value(const oracle::ZV& x) {
  const oracle::Q x1(x[0]);
  const oracle::Q x2(x[1]);
  return oracle::Qt{{oracle::canon(x1 * x1 + 2 * x2 * x2 - x1), oracle::canon(-2 * x1 * x2)}};
}

Json run_cli(const std::vector<std::string>& args, int& code) {
  std::vector<std::string> full = {"thinray"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  code = thinray::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return Json::parse(out.str());
}

oracle::ZV parse_point(const Json& j) {
  oracle::ZV x;
  for (const auto& v : j) x.emplace_back(v.get<std::string>());
  return x;
}

bool all_facts_hold(const Json& doc, Outcome& o) {
  bool all = true;
  for (const auto& f : doc.at("facts")) {
    const bool h = f.at("holds").get<bool>();
    o.require(h, "fact failed: " + f.at("fact").get<std::string>());
    all = all && h;
  }
  return all;
}

Json critical_direction(const Json& doc) {
  for (const auto& d : doc.at("result").at("directions")) {
    if (d.at("source") == "curve 1 root 1") return d;
  }
  return Json();
}

// 1. cubic example
Outcome criterion_cubic_reproduce() {
  Outcome o;
  int code = 0;
  const Json doc = run_cli({"reproduce", "cubic-example"}, code);
  o.require(code == 0, "reproduce exit code " + std::to_string(code));
  o.require(doc.at("status") == "ok", "status is not ok");
  all_facts_hold(doc, o);

  // identities recomputed in Q[t]/(t^3 - 2) by hand
  const auto d = cubic_ref_direction();
  const auto& m = kCubicMod;
  const auto cube = [&](const oracle::Qt& a) { return oracle::mul(oracle::mul(a, a, m), a, m); };
  const auto c = [&](long v) { return oracle::qt_const(v, m); };
  const oracle::Qt t3 = oracle::sub(
      oracle::add(oracle::add(oracle::mul(c(2), cube(d[0]), m), cube(d[1])), oracle::mul(c(4), cube(d[2]), m)),
      oracle::mul(c(6), oracle::mul(oracle::mul(d[0], d[1], m), d[2], m), m));
  o.require(oracle::is_zero(t3), "T[d,d,d] != 0");
  const std::vector<oracle::Qt> tdd = {
      oracle::sub(oracle::mul(c(2), oracle::mul(d[0], d[0], m), m), oracle::mul(c(2), oracle::mul(d[1], d[2], m), m)),
      oracle::sub(oracle::mul(d[1], d[1], m), oracle::mul(c(2), oracle::mul(d[0], d[2], m), m)),
      oracle::sub(oracle::mul(c(4), oracle::mul(d[2], d[2], m), m), oracle::mul(c(2), oracle::mul(d[0], d[1], m), m))};
  for (const auto& v : tdd) o.require(oracle::is_zero(v), "T[d,d] component != 0");
  const oracle::Qt vd = oracle::sub(c(0), d[0]);
  o.require(oracle::sign(vd, kCubicMinpoly, kBox) == -1, "V[d] is not negative");

  const Json dir = critical_direction(doc);
  o.require(!dir.is_null(), "no critical direction in the report");
  if (dir.is_null()) return o;
  o.require(dir.at("diagnostics").at("V[d]_sign") == -1, "reported V[d] sign");
  const Json& pts = dir.at("witnesses").at("points");
  o.require(pts.size() >= 3, "fewer than 3 witnesses");
  const oracle::Q targets[] = {-10, -100, -1000};
  std::string list;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const oracle::ZV x = parse_point(pts[i].at("point"));
    const oracle::Q v = oracle::cubic_example_value(x);
    o.require(oracle::in_cubic_cone(x), "witness outside P");
    o.require(oracle::near_ray(x, {0, 0, 0}, d, oracle::Q(1, 2), m, kCubicMinpoly, kBox), "witness not within 1/2");
    if (i < 3) o.require(v <= targets[i], "witness above its target");
    list += (list.empty() ? "" : " ") + v.get_str();
  }
  o.detail = "witness values " + list;
  return o;
}

// 2. extreme rays and sampled rational directions are PLUS_INF
Outcome criterion_plain_rays_bounded() {
  Outcome o;
  const HPolyhedron P = cubic_cone();
  const CubicObjective f = cubic_objective();
  std::vector<IntVec> apexes;
  for (const auto& x : oracle::box_points(P.A(), P.b(), 3, 4)) apexes.push_back(x);
  const auto a3 = [](const oracle::Q& p, const oracle::Q& q) {
    // T[d,d,d] for d = (p, q, 1)
    return oracle::canon(2 * p * p * p + q * q * q + 4 - 6 * p * q);
  };
  std::vector<Vec> dirs;
  std::vector<oracle::Q> expected;
  auto rays = extreme_rays(P);
  o.require(rays.size() == 4, "expected 4 extreme rays");
  for (const auto& r : rays) {
    dirs.push_back(to_vec(r));
    expected.push_back(a3(oracle::canon(oracle::Q(r[0], r[2])), oracle::canon(oracle::Q(r[1], r[2]))) * r[2] * r[2] * r[2]);
  }
  auto g = oracle::rng(2);
  while (dirs.size() < 4 + 200) {
    const long den = oracle::uniform(g, 1, 20);
    const oracle::Q p = oracle::canon(oracle::Q(oracle::uniform(g, den, 2 * den), den));
    const oracle::Q q = oracle::canon(oracle::Q(oracle::uniform(g, den, 2 * den), den));
    dirs.push_back({FieldElement(p), FieldElement(q), FieldElement(1)});
    expected.push_back(a3(p, q));
  }
  std::size_t checks = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    o.require(in_recession(P, dirs[i]), "sampled direction outside rec(P)");
    o.require(expected[i] > 0, "oracle a3 not positive");
    for (const auto& y : apexes) {
      const RestrictionPoly r = restriction(f, to_vec(y), dirs[i]);
      o.require(r.a3 == FieldElement(expected[i]), "a3 disagrees with oracle");
      o.require(classify_limit(r).kind == LimitKind::PlusInf, "not PLUS_INF");
      ++checks;
    }
  }
  o.detail = std::to_string(dirs.size()) + " directions x " + std::to_string(apexes.size()) + " apexes = " +
             std::to_string(checks) + " restrictions";
  return o;
}

// 3. quadratic example
Outcome criterion_quadratic_reproduce() {
  Outcome o;
  int code = 0;
  const Json doc = run_cli({"reproduce", "quadratic-example"}, code);
  o.require(code == 0, "reproduce exit code " + std::to_string(code));
  o.require(doc.at("status") == "ok", "status is not ok");
  all_facts_hold(doc, o);

  const auto d = quadratic_ref_direction();
  const auto& m = kQuadMod;
  // M[d,d] = d1^2 - 2 theta d1 d2 + 2 d2^2
  const oracle::Qt th = oracle::qt_gen(m);
  const oracle::Qt mdd = oracle::add(
      oracle::sub(oracle::mul(d[0], d[0], m), oracle::mul(oracle::mul(oracle::qt_const(2, m), th, m), oracle::mul(d[0], d[1], m), m)),
      oracle::mul(oracle::qt_const(2, m), oracle::mul(d[1], d[1], m), m));
  o.require(oracle::is_zero(mdd), "M[d,d] != 0");
  o.require(oracle::sign(oracle::sub(oracle::qt_const(0, m), d[0]), kQuadMinpoly, kBox) == -1, "V[d] is not negative");

  const Json& rays = doc.at("result").at("extreme_rays");
  o.require(rays.size() == 2, "expected 2 extreme rays");
  for (const auto& r : rays) {
    o.require(r.at("limits").at("PLUS_INF") == r.at("apexes_checked"), "extreme ray not PLUS_INF from every apex");
  }
  const Json dir = critical_direction(doc);
  o.require(!dir.is_null(), "no critical direction in the report");
  if (dir.is_null()) return o;
  const Json& pts = dir.at("witnesses").at("points");
  o.require(pts.size() >= 3, "fewer than 3 witnesses");
  const long targets[] = {-10, -100, -1000};
  std::string list;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const oracle::ZV x = parse_point(pts[i].at("point"));
    o.require(oracle::in_quadratic_cone(x), "witness outside P");
    o.require(oracle::near_ray(x, {0, 0}, d, oracle::Q(1, 2), m, kQuadMinpoly, kBox), "witness not within 1/2");
    if (i < 3) {
      const oracle::Qt gap = oracle::sub(quadratic_value(x), oracle::qt_const(targets[i], m));
      o.require(oracle::sign(gap, kQuadMinpoly, kBox) <= 0, "witness above its target");
    }
    list += (list.empty() ? "(" : " (") + x[0].get_str() + "," + x[1].get_str() + ")";
  }
  o.detail = "witnesses " + list;
  return o;
}

// 4. critical direction on (t, t^2, 1)
Outcome criterion_curve_scan() {
  Outcome o;
  const CurveScan s = curve_critical_directions(cubic_objective(), cubic_curve());
  o.require(s.roots.size() == 1, "expected exactly one root");
  if (s.roots.size() == 1) {
    o.require(s.roots[0].root.min_poly == IntPolynomial({-2, 0, 0, 1}), "root min_poly is not t^3 - 2");
  }
  const std::vector<long> want = {4, 0, 0, -4, 0, 0, 1};
  o.require(s.expanded.size() == want.size(), "expanded degree");
  for (std::size_t i = 0; i < want.size() && i < s.expanded.size(); ++i) {
    o.require(s.expanded[i] == FieldElement(want[i]), "expanded coefficient " + std::to_string(i));
  }
  // independent: raw cubic part evaluated along the curve at 7 nodes
  std::vector<oracle::Q> raw(27, 0);
  raw[0] = 2;
  raw[13] = 1;
  raw[26] = 4;
  raw[5] = -6;  // x1 x2 x3
  const oracle::Poly cubic = oracle::expand(3, raw, std::vector<oracle::Q>(9, 0), std::vector<oracle::Q>(3, 0), 0);
  for (long k = -3; k <= 3; ++k) {
    const oracle::Q t(k, 2);
    oracle::Q lhs = 0;
    for (std::size_t i = s.expanded.size(); i-- > 0;) lhs = lhs * t + *s.expanded[i].as_rational();
    o.require(oracle::canon(lhs) == cubic.eval({t, t * t, 1}), "expanded polynomial disagrees at a node");
  }
  o.detail = "search poly " + s.search_poly.to_string();
  return o;
}

// 5. f = -x1^2 on the quadrant: plain ray
Outcome criterion_plain_ray() {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() / "thinray-acceptance-minus-square.json";
  std::ofstream(path) << R"({"dimension": 2,
    "polyhedron": {"A": [["-1", "0"], ["0", "-1"]], "b": ["0", "0"]},
    "objective": {"matrix": [{"i": 1, "j": 1, "value": "-1"}]}})";
  int code = 0;
  const Json doc = run_cli({"analyze", path.string()}, code);
  o.require(code == 0, "analyze exit code " + std::to_string(code));
  o.require(doc.at("result").at("verdict") == "certified unbounded", "verdict");
  bool found = false;
  for (const auto& r : doc.at("result").at("extreme_rays")) {
    if (r.at("unbounded_from").is_null()) continue;
    found = true;
    o.require(r.at("plain_ray_epsilon") == "0", "plain ray epsilon is not 0");
    o.require(r.at("limits").at("MINUS_INF").get<int>() > 0, "no MINUS_INF check");
    const oracle::ZV dir = parse_point(r.at("direction"));
    o.require(dir == oracle::ZV{1, 0}, "unexpected unbounded direction");
    oracle::Q prev = 1;
    const Json& pts = r.at("on_ray_points");
    o.require(pts.size() == 10, "expected 10 on-ray points");
    for (const auto& p : pts) {
      const oracle::ZV x = parse_point(p.at("point"));
      const oracle::Q v = -oracle::Q(x[0] * x[0]);
      o.require(x[0] >= 0 && x[1] >= 0, "on-ray point outside P");
      o.require(v < prev, "on-ray values not decreasing");
      prev = v;
    }
    o.detail = "direction (1,0), last on-ray value " + prev.get_str();
  }
  o.require(found, "no plain ray flagged");
  std::filesystem::remove(path);
  return o;
}

// 6. trend
Outcome criterion_trend() {
  Outcome o;
  const std::vector<long> radii = {2, 5, 10, 20};
  const TrendReport t = trend(cubic_objective(), cubic_cone(), radii);
  o.require(t.nonincreasing, "minima not nonincreasing");
  std::string list;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    o.require(t.minima[i].has_value(), "empty box");
    if (!t.minima[i]) return o;
    // independent box scan
    oracle::Q best = 0;
    bool first = true;
    for (const auto& x : oracle::box_points(cubic_cone().A(), cubic_cone().b(), 3, radii[i])) {
      const oracle::Q v = oracle::cubic_example_value(x);
      if (first || v < best) best = v;
      first = false;
    }
    o.require(*t.minima[i] == FieldElement(best), "minimum disagrees with box scan at radius " + std::to_string(radii[i]));
    list += (list.empty() ? "" : " ") + best.get_str();
  }
  o.require(*t.minima[0] == FieldElement(0), "min(2) != 0");
  o.require(compare(*t.minima[1], FieldElement(-3)) <= 0, "min(5) > -3");
  o.require(oracle::in_cubic_cone({4, 5, 3}) && oracle::cubic_example_value({4, 5, 3}) == -3, "f(4,5,3) != -3");
  o.require(compare(*t.minima[3], *t.minima[1]) < 0, "no decrease from radius 5 to 20");
  o.detail = "minima " + list;
  return o;
}

// 7. property suites
QVec random_qvec(std::mt19937_64& g, int n, long num = 6, long den = 4) {
  QVec x;
  for (int i = 0; i < n; ++i) x.push_back(oracle::random_rational(g, num, den));
  return x;
}

Rational sq_norm(const QVec& x) {
  Rational s = 0;
  for (const auto& v : x) s += v * v;
  return s;
}

struct RawCubic {
  int n;
  std::vector<Rational> a, b, v;
  Rational c;

  CubicObjective objective() const {
    return CubicObjective(SymTensor3::symmetrize(n, Vec(a.begin(), a.end())), SymMatrix::symmetrize(n, Vec(b.begin(), b.end())),
                          LinVec(Vec(v.begin(), v.end())), c);
  }
  oracle::Poly poly() const { return oracle::expand(n, a, b, v, c); }
};

RawCubic random_raw(std::mt19937_64& g, int n) {
  RawCubic r{n, {}, {}, {}, 0};
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un * un * un; ++i) r.a.push_back(oracle::uniform(g, 0, 2) ? oracle::random_rational(g, 9, 4) : 0);
  for (std::size_t i = 0; i < un * un; ++i) r.b.push_back(oracle::random_rational(g, 9, 4));
  for (std::size_t i = 0; i < un; ++i) r.v.push_back(oracle::random_rational(g, 9, 4));
  r.c = oracle::random_rational(g, 9, 4);
  return r;
}

QVec plus(const QVec& a, const QVec& b, const Rational& s = 1) {
  QVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

Outcome criterion_properties() {
  Outcome o;
  std::vector<std::string> suites;
  const auto suite = [&](const std::string& name, int cases, const std::function<bool(std::mt19937_64&)>& one) {
    auto g = oracle::rng(700 + suites.size());
    int bad = 0;
    for (int i = 0; i < cases; ++i) bad += one(g) ? 0 : 1;
    o.require(bad == 0, name + ": " + std::to_string(bad) + " of " + std::to_string(cases) + " failed");
    suites.push_back(name + " " + std::to_string(cases - bad) + "/" + std::to_string(cases));
  };

  suite("symmetrization", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const RawCubic r = random_raw(g, n);
    const QVec x = random_qvec(g, n);
    return eval_cubic(r.objective(), to_vec(x)) == FieldElement(r.poly().eval(x));
  });
  suite("permutation", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const SymTensor3 T = random_raw(g, n).objective().T;
    const Vec x = to_vec(random_qvec(g, n)), y = to_vec(random_qvec(g, n)), z = to_vec(random_qvec(g, n));
    const FieldElement ref = eval_trilinear(T, x, y, z);
    return eval_trilinear(T, x, z, y) == ref && eval_trilinear(T, y, x, z) == ref && eval_trilinear(T, y, z, x) == ref &&
           eval_trilinear(T, z, x, y) == ref && eval_trilinear(T, z, y, x) == ref;
  });
  suite("contraction", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const SymTensor3 T = random_raw(g, n).objective().T;
    const Vec x = to_vec(random_qvec(g, n)), d = to_vec(random_qvec(g, n));
    return dot(x, contract(T, d, d)) == eval_trilinear(T, x, d, d);
  });
  suite("restriction", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const RawCubic raw = random_raw(g, n);
    const QVec y = random_qvec(g, n), d = random_qvec(g, n);
    const RestrictionPoly r = restriction(raw.objective(), to_vec(y), to_vec(d));
    const oracle::Poly p = raw.poly();
    for (int k = 0; k < 4; ++k) {
      const Rational l = oracle::random_rational(g, 20, 7);
      if (r.eval(FieldElement(l)) != FieldElement(p.eval(plus(y, d, l)))) return false;
    }
    return true;
  });
  suite("translation", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const RawCubic raw = random_raw(g, n);
    const CubicObjective f = raw.objective();
    const QVec y = random_qvec(g, n), d = random_qvec(g, n), z = random_qvec(g, n, 2, 5);
    const TranslationTerms t = translation_terms(f, to_vec(y), to_vec(d), to_vec(z));
    const RestrictionPoly r = restriction(f, to_vec(y), to_vec(d));
    // f(y + z + l d) - r(l) = d2 l^2 + d1 l + d0, checked at 4 values of l
    const oracle::Poly p = raw.poly();
    for (long l = -1; l <= 2; ++l) {
      const FieldElement L(l);
      const FieldElement lhs = FieldElement(p.eval(plus(plus(y, z), d, Rational(l)))) - r.eval(L);
      if (lhs != (t.d2 * L + t.d1) * L + t.d0) return false;
    }
    return true;
  });
  suite("perturbation", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const CubicObjective f = random_raw(g, n).objective();
    const QVec y = random_qvec(g, n), d = random_qvec(g, n);
    const Rational eps(1, oracle::uniform(g, 1, 8));
    const PerturbationBounds b = perturbation_bounds(f, to_vec(y), to_vec(d), eps);
    QVec z = random_qvec(g, n, 5, 5);
    while (sq_norm(z) > eps * eps) {
      for (auto& v : z) v /= 2;
    }
    const TranslationTerms t = translation_terms(f, to_vec(y), to_vec(d), to_vec(z));
    return abs_of(*t.d2.as_rational()) <= b.D2 && abs_of(*t.d1.as_rational()) <= b.D1 &&
           abs_of(*t.d0.as_rational()) <= b.D0;
  });
  suite("hnf", 100, [](std::mt19937_64& g) {
    const long m = oracle::uniform(g, 1, 4), n = oracle::uniform(g, 1, 5);
    IntMatrix B(static_cast<std::size_t>(m), IntVec(static_cast<std::size_t>(n)));
    for (auto& row : B) {
      for (auto& v : row) v = oracle::uniform(g, -9, 9);
    }
    const HnfResult r = hnf(B);
    return multiply(B, r.U) == r.H && abs(determinant(r.U)) == 1;
  });
  suite("lattice double inclusion", 50, [](std::mt19937_64& g) {
    for (;;) {
      const int n = static_cast<int>(oracle::uniform(g, 2, 3));
      const int l = static_cast<int>(oracle::uniform(g, 1, n - 1));
      AffineSubspace S{n, {}, {}};
      IntVec x0;
      for (int i = 0; i < n; ++i) x0.emplace_back(oracle::uniform(g, -3, 3));
      for (int i = 0; i < l; ++i) {
        QVec row;
        Rational rhs = 0;
        const long den = oracle::uniform(g, 1, 3);
        for (int j = 0; j < n; ++j) {
          row.push_back(oracle::canon(Rational(oracle::uniform(g, -4, 4), den)));
          rhs += row.back() * Rational(x0[static_cast<std::size_t>(j)]);
        }
        S.W.push_back(row);
        S.w.push_back(rhs);
      }
      if (rank(S.W) != l) continue;
      const auto on = [&](const IntVec& x) {
        for (std::size_t i = 0; i < S.W.size(); ++i) {
          Rational s = 0;
          for (std::size_t j = 0; j < x.size(); ++j) s += S.W[i][j] * Rational(x[j]);
          if (s != S.w[i]) return false;
        }
        return true;
      };
      const auto p = integer_affine_param(S);
      if (!p) return false;
      for (const auto& x : oracle::box_points({}, {}, n, 8)) {
        if (!on(x)) continue;
        const auto z = p->integer_preimage(x);
        if (!z || p->map(*z) != x) return false;
      }
      for (const auto& z : oracle::box_points({}, {}, p->reduced_dim, 6)) {
        if (!on(p->map(z))) return false;
      }
      return true;
    }
  });
  suite("near-ray certificates", 100, [](std::mt19937_64& g) {
    const bool cubic = oracle::uniform(g, 0, 1) == 1;
    const Rational eps(1, oracle::uniform(g, 2, 16));
    const Rational lb(oracle::uniform(g, 1, 300), oracle::uniform(g, 1, 3));
    if (cubic) {
      const IntVec y = ints({oracle::uniform(g, 3, 4), 3, 2});
      const HalflinePoint h = point_near_halfline(cubic_cone(), y, cubic_direction(), eps, lb);
      const auto dist = oracle::halfline_distance(h.point, y, cubic_ref_direction(), kCubicMod);
      const oracle::Qt past = oracle::sub(dist.lambda_num, oracle::mul(oracle::qt_const(lb, kCubicMod), dist.dd, kCubicMod));
      return oracle::in_cubic_cone(h.point) &&
             oracle::near_ray(h.point, y, cubic_ref_direction(), eps, kCubicMod, kCubicMinpoly, kBox) &&
             oracle::sign(past, kCubicMinpoly, kBox) >= 0;
    }
    const IntVec y = ints({oracle::uniform(g, 2, 4), 2});
    const HalflinePoint h = point_near_halfline(quadratic_cone(), y, quadratic_direction(), eps, lb);
    const auto dist = oracle::halfline_distance(h.point, y, quadratic_ref_direction(), kQuadMod);
    const oracle::Qt past = oracle::sub(dist.lambda_num, oracle::mul(oracle::qt_const(lb, kQuadMod), dist.dd, kQuadMod));
    return oracle::in_quadratic_cone(h.point) &&
           oracle::near_ray(h.point, y, quadratic_ref_direction(), eps, kQuadMod, kQuadMinpoly, kBox) &&
           oracle::sign(past, kQuadMinpoly, kBox) >= 0;
  });
  suite("norm soundness", 100, [](std::mt19937_64& g) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const CubicObjective f = random_raw(g, n).objective();
    const QVec x = random_qvec(g, n), y = random_qvec(g, n), z = random_qvec(g, n);
    const Rational t = *eval_trilinear(f.T, to_vec(x), to_vec(y), to_vec(z)).as_rational();
    const Rational m = *eval_bilinear(f.M, to_vec(x), to_vec(y)).as_rational();
    const Rational nT = norm_bound(f.T), nM = norm_bound(f.M);
    return t * t <= nT * nT * sq_norm(x) * sq_norm(y) * sq_norm(z) && m * m <= nM * nM * sq_norm(x) * sq_norm(y);
  });

  for (const auto& s : suites) o.detail += (o.detail.empty() ? "" : "; ") + s;
  return o;
}

// 8. sparsity of the irrational critical rays
Outcome criterion_sparsity() {
  Outcome o;
  const auto worst = [](const HPolyhedron& P, int n, const std::vector<oracle::Qt>& d, const oracle::Modulus& m) {
    const auto pts = oracle::box_points(P.A(), P.b(), n, 20);
    std::size_t w = 0;
    for (const auto& y : pts) w = std::max(w, oracle::count_on_ray(pts, y, d, m));
    return std::make_pair(w, pts.size());
  };
  const auto [wc, nc] = worst(cubic_cone(), 3, cubic_ref_direction(), kCubicMod);
  const auto [wq, nq] = worst(quadratic_cone(), 2, quadratic_ref_direction(), kQuadMod);
  o.require(wc <= 1, "two cubic box points share a critical ray");
  o.require(wq <= 1, "two quadratic box points share a critical ray");
  o.detail = "every one of " + std::to_string(nc) + " + " + std::to_string(nq) +
             " box points used as apex; max points per ray " + std::to_string(std::max(wc, wq));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "cubic example reproduction", criterion_cubic_reproduce},
      {2, "plain rays bounded in the cubic example", criterion_plain_rays_bounded},
      {3, "quadratic example reproduction", criterion_quadratic_reproduce},
      {4, "critical direction on (t, t^2, 1)", criterion_curve_scan},
      {5, "plain ray for -x1^2 on the quadrant", criterion_plain_ray},
      {6, "oracle trend over radii 2, 5, 10, 20", criterion_trend},
      {7, "property suites", criterion_properties},
      {8, "irrational-ray sparsity at radius 20", criterion_sparsity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.2f s)", o.ok ? "PASS" : "FAIL", c.id, c.title, secs);
    if (!o.detail.empty()) std::printf(": %s", o.detail.c_str());
    std::printf("\n");
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
