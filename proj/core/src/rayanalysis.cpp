#include "thinray/rayanalysis.hpp"

#include <algorithm>

#include "thinray/errors.hpp"

namespace thinray {

namespace {

Rational abs_upper(const FieldElement& e) {
  if (auto r = e.as_rational()) return abs_of(*r);
  return std::max(abs_of(fe_upper(e)), abs_of(fe_lower(e)));
}

/// Polynomial in t with field coefficients, low to high degree.
using FieldPoly = std::vector<FieldElement>;

FieldPoly to_field_poly(const IntPolynomial& p) {
  FieldPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

void poly_axpy(FieldPoly& acc, const FieldElement& s, const FieldPoly& p) {
  if (s.is_zero()) return;
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) acc[i] += s * p[i];
  }
}

void poly_trim(FieldPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FieldElement poly_eval(const FieldPoly& p, const FieldElement& t) {
  FieldElement acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational rational_det(QMatrix A) {
  const std::size_t n = A.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && A[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(A[piv], A[k]);
      det = -det;
    }
    det *= A[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (A[i][k] == 0) continue;
      const Rational f = A[i][k] / A[k][k];
      for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
    }
  }
  return det;
}

/// Norm N(a) = det of multiplication by a on Q(theta).
Rational field_norm(const FieldElement& a, const FieldPtr& field) {
  if (!field) return a.coeffs()[0];
  const auto k = static_cast<std::size_t>(field->degree());
  QMatrix mult(k, QVec(k));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> basis(k, Rational(0));
    basis[j] = 1;
    const FieldElement col = a * FieldElement(field, basis);
    for (std::size_t i = 0; i < k; ++i) mult[i][j] = i < col.coeffs().size() ? col.coeffs()[i] : Rational(0);
  }
  return rational_det(mult);
}

/// Lagrange interpolation through (x_i, y_i).
RatPolynomial interpolate(const QVec& xs, const QVec& ys) {
  RatPolynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis(std::vector<Rational>{Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    out = out + Rational(ys[i] / denom) * basis;
  }
  return out;
}

FieldPoly form_along_curve(const CubicObjective& f, const std::vector<FieldPoly>& d, char form) {
  const int n = f.dim();
  FieldPoly acc;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (form == 'M') {
        const FieldElement& m = f.M(i, j);
        if (!m.is_zero()) poly_axpy(acc, m, poly_mul(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]));
        continue;
      }
      FieldPoly dij;
      for (int k = 0; k < n; ++k) {
        const FieldElement& t = f.T(i, j, k);
        if (t.is_zero()) continue;
        if (dij.empty()) dij = poly_mul(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
        poly_axpy(acc, t, poly_mul(dij, d[static_cast<std::size_t>(k)]));
      }
    }
  }
  poly_trim(acc);
  return acc;
}

/// Integer polynomial vanishing at every real root of p (p itself when
/// rational, otherwise its norm over Q).
IntPolynomial search_polynomial(const FieldPoly& p) {
  const FieldPtr field = common_field(std::span<const FieldElement>(p));
  if (!field) {
    std::vector<Rational> c;
    for (const auto& e : p) c.push_back(e.coeffs()[0]);
    return RatPolynomial(c).to_primitive_int();
  }
  const int deg = static_cast<int>(p.size()) - 1;
  const int total = deg * field->degree();
  QVec xs;
  QVec ys;
  for (int i = 0; i <= total; ++i) {
    xs.emplace_back(i);
    ys.push_back(field_norm(poly_eval(p, FieldElement(i)), field));
  }
  return interpolate(xs, ys).to_primitive_int();
}

/// -1 below the domain, 0 inside, 1 above (refining as needed).
int locate(AlgebraicReal& r, const Rational& lo, const Rational& hi) {
  for (;;) {
    if (r.hi < lo) return -1;
    if (r.lo > hi) return 1;
    if (r.lo >= lo && r.hi <= hi) return 0;
    if (r.is_rational()) return r.lo < lo ? -1 : (r.lo > hi ? 1 : 0);
    r = refine(r, (r.hi - r.lo) / 2);
  }
}

}  // namespace

FieldElement RestrictionPoly::eval(const FieldElement& lambda) const {
  return ((a3 * lambda + a2) * lambda + a1) * lambda + a0;
}

RestrictionPoly restriction(const CubicObjective& f, const Vec& y, const Vec& d) {
  const SymTensor3& T = f.T;
  RestrictionPoly r;
  r.a3 = eval_trilinear(T, d, d, d);
  r.a2 = FieldElement(3) * eval_trilinear(T, y, d, d) + eval_bilinear(f.M, d, d);
  r.a1 = FieldElement(3) * eval_trilinear(T, y, y, d) + FieldElement(2) * eval_bilinear(f.M, y, d) + eval_linear(f.V, d);
  r.a0 = eval_cubic(f, y);
  return r;
}

LimitClass classify_limit(const RestrictionPoly& r) {
  const FieldElement* coeffs[3] = {&r.a3, &r.a2, &r.a1};
  for (int i = 0; i < 3; ++i) {
    const int s = fe_sign(*coeffs[i]);
    if (s == 0) continue;
    return LimitClass{s < 0 ? LimitKind::MinusInf : LimitKind::PlusInf, 3 - i};
  }
  return LimitClass{LimitKind::Constant, 0};
}

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::MinusInf:
      return "MINUS_INF";
    case LimitKind::PlusInf:
      return "PLUS_INF";
    case LimitKind::Constant:
      return "CONSTANT";
  }
  return "CONSTANT";
}

TranslationTerms translation_terms(const CubicObjective& f, const Vec& y, const Vec& d, const Vec& z) {
  const SymTensor3& T = f.T;
  TranslationTerms t;
  t.d2 = FieldElement(3) * eval_trilinear(T, z, d, d);
  t.d1 = FieldElement(6) * eval_trilinear(T, y, z, d) + FieldElement(3) * eval_trilinear(T, z, z, d) +
         FieldElement(2) * eval_bilinear(f.M, z, d);
  t.d0 = FieldElement(3) * eval_trilinear(T, y, z, z) + FieldElement(3) * eval_trilinear(T, y, y, z) +
         eval_trilinear(T, z, z, z) + FieldElement(2) * eval_bilinear(f.M, y, z) + eval_bilinear(f.M, z, z) +
         eval_linear(f.V, z);
  return t;
}

Rational norm_upper(const Vec& x) {
  Rational sq = 0;
  for (const auto& v : x) {
    if (v.is_zero()) continue;
    if (auto r = v.as_rational()) {
      sq += *r * *r;
    } else {
      const Rational u = abs_upper(v);
      sq += u * u;
    }
  }
  return sqrt_upper(sq);
}

PerturbationBounds perturbation_bounds(const CubicObjective& f, const Vec& y, const Vec& d, const Rational& eps) {
  if (eps <= 0) throw ValidationError("perturbation bounds need eps > 0");
  const Rational nT = norm_bound(f.T);
  const Rational nM = norm_bound(f.M);
  const Rational nV = norm_bound(f.V);
  PerturbationBounds b;
  b.Uy = norm_upper(y);
  b.Ud = norm_upper(d);
  const Rational& Uy = b.Uy;
  const Rational& Ud = b.Ud;
  b.D2 = 3 * eps * nT * Ud * Ud;
  b.D1 = eps * (6 * nT * Uy * Ud + 2 * nM * Ud) + 3 * eps * eps * nT * Ud;
  b.D0 = eps * (3 * nT * Uy * Uy + 2 * nM * Uy + nV) + eps * eps * (3 * nT * Uy + nM) + eps * eps * eps * nT;
  return b;
}

Rational shrink_epsilon(const CubicObjective& f, const Vec& y, const Vec& d, const Rational& eps0, ShrinkCase c) {
  if (eps0 <= 0) throw ValidationError("shrink_epsilon needs eps0 > 0");
  const RestrictionPoly r = restriction(f, y, d);
  const FieldElement& a = c == ShrinkCase::Deg2 ? r.a2 : r.a1;
  if (fe_sign(a) >= 0) {
    throw WrongCase(std::string(c == ShrinkCase::Deg2 ? "a2" : "a1") + " is not strictly negative");
  }
  Rational eps = eps0;
  for (;;) {
    const PerturbationBounds b = perturbation_bounds(f, y, d, eps);
    const Rational& delta = c == ShrinkCase::Deg2 ? b.D2 : b.D1;
    if (fe_sign(a + FieldElement(delta)) < 0) return eps;
    eps /= 2;
  }
}

DirectionDiagnostics direction_diagnostics(const CubicObjective& f, const Vec& d, const std::optional<Vec>& v) {
  DirectionDiagnostics g;
  g.tdd = contract(f.T, d, d);
  g.md = contract(f.M, d);
  g.t3 = dot(g.tdd, d);
  g.m2 = dot(g.md, d);
  g.v1 = eval_linear(f.V, d);
  g.t3_zero = g.t3.is_zero();
  g.m2_zero = g.m2.is_zero();
  g.tdd_zero = is_zero_vec(g.tdd);
  g.md_zero = is_zero_vec(g.md);
  g.v1_nonneg = fe_sign(g.v1) >= 0;
  if (v) {
    g.mdv = eval_bilinear(f.M, d, *v);
    g.tdv = contract(f.T, d, *v);
    g.mdv_zero = g.mdv->is_zero();
    g.tdv_zero = is_zero_vec(*g.tdv);
  }
  return g;
}

Vec eval_curve(const Curve& curve, const FieldElement& t) {
  Vec out;
  for (const auto& p : curve.components) out.push_back(poly_eval(to_field_poly(p), t));
  return out;
}

CurveScan curve_critical_directions(const CubicObjective& f, const Curve& curve) {
  if (curve.components.size() != static_cast<std::size_t>(f.dim())) {
    throw DimensionMismatch("curve has " + std::to_string(curve.components.size()) + " components, objective dimension " +
                            std::to_string(f.dim()));
  }
  if (curve.lo > curve.hi) throw ValidationError("curve domain has lo > hi");
  std::vector<FieldPoly> d;
  for (const auto& p : curve.components) d.push_back(to_field_poly(p));

  CurveScan scan;
  scan.identically_zero = true;
  for (char form : {'T', 'M'}) {
    if (form == 'T' ? f.T.is_zero() : f.M.is_zero()) continue;
    FieldPoly g = form_along_curve(f, d, form);
    if (g.empty()) continue;
    scan.form = form;
    scan.expanded = std::move(g);
    scan.identically_zero = false;
    break;
  }
  if (scan.identically_zero) return scan;

  const FieldPtr objective_field = f.field();
  scan.search_poly = search_polynomial(scan.expanded);
  if (scan.search_poly.degree() < 1) return scan;

  for (AlgebraicReal root : isolate_real_roots(scan.search_poly)) {
    if (locate(root, curve.lo, curve.hi) != 0) continue;
    if (root.is_rational()) {
      if (!poly_eval(scan.expanded, FieldElement(root.lo)).is_zero()) continue;
      scan.roots.push_back(CriticalDirection{root, nullptr, eval_curve(curve, FieldElement(root.lo))});
      continue;
    }
    if (!root.irreducible) {
      ++scan.skipped_roots;
      continue;
    }
    FieldPtr field = NumberField::create(root);
    if (objective_field) {
      if (!objective_field->same_as(*field)) {
        ++scan.skipped_roots;
        continue;
      }
      field = objective_field;
    }
    const FieldElement theta = FieldElement::generator(field);
    if (!poly_eval(scan.expanded, theta).is_zero()) continue;
    scan.roots.push_back(CriticalDirection{field->generator(), field, eval_curve(curve, theta)});
  }
  return scan;
}

}  // namespace thinray
