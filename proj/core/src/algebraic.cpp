#include "thinray/algebraic.hpp"

#include <algorithm>
#include <sstream>

#include "thinray/errors.hpp"

namespace thinray {

// ---------------------------------------------------------------- intervals

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p1 = a.lo * b.lo;
  const Rational p2 = a.lo * b.hi;
  const Rational p3 = a.hi * b.lo;
  const Rational p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

namespace {

/// Interval Horner evaluation of sum coeffs[k] * x^k.
Interval eval_interval(const std::vector<Rational>& coeffs, const Interval& x) {
  Interval acc{Rational(0), Rational(0)};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

/// Bisects [lo, hi] around the unique root of p `steps` times.
Interval bisect(const IntPolynomial& p, Interval iv, int steps) {
  if (iv.lo == iv.hi) return iv;
  int s_lo = p.sign_at(iv.lo);
  if (s_lo == 0) return {iv.lo, iv.lo};
  for (int i = 0; i < steps; ++i) {
    const Rational m = iv.mid();
    const int s = p.sign_at(m);
    if (s == 0) return {m, m};
    if (s == s_lo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

/// Exact number of roots of squarefree p in the open interval (a, b).
int count_roots_open(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (a >= b) return 0;
  const int v = descartes_bound(p, a, b);
  if (v <= 1) return v;
  const Rational m = (a + b) / 2;
  return count_roots_open(p, a, m) + (p.sign_at(m) == 0 ? 1 : 0) + count_roots_open(p, m, b);
}

Rational cauchy_bound(const IntPolynomial& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r(abs(p.coeff(k)), abs(p.leading()));
    r.canonicalize();
    m = std::max(m, r);
  }
  return Rational(1) + m;
}

/// Descartes bisection on a squarefree polynomial without rational roots.
void isolate_irrational(const IntPolynomial& p, const Rational& a, const Rational& b, bool irreducible,
                        std::vector<AlgebraicReal>& out) {
  const int v = descartes_bound(p, a, b);
  if (v == 0) return;
  if (v == 1) {
    out.push_back(AlgebraicReal{p, a, b, irreducible});
    return;
  }
  const Rational m = (a + b) / 2;
  isolate_irrational(p, a, m, irreducible, out);
  isolate_irrational(p, m, b, irreducible, out);
}

}  // namespace

int descartes_bound(const IntPolynomial& p, const Rational& a, const Rational& b) {
  // q(x) = p(a + (b - a) x), then (x + 1)^n q(1 / (x + 1)).
  const Rational h = b - a;
  const RatPolynomial lin(std::vector<Rational>{a, h});
  RatPolynomial q;
  for (int k = p.degree(); k >= 0; --k) q = q * lin + RatPolynomial(std::vector<Rational>{Rational(p.coeff(k))});
  const int n = p.degree();
  std::vector<Rational> rev(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) rev[static_cast<std::size_t>(n - k)] = q.coeff(k);
  const RatPolynomial shift(std::vector<Rational>{Rational(1), Rational(1)});
  RatPolynomial s;
  for (int k = n; k >= 0; --k) s = s * shift + RatPolynomial(std::vector<Rational>{rev[static_cast<std::size_t>(k)]});
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s.coeff(k);
  return sign_variations(c);
}

double AlgebraicReal::approx() const {
  const AlgebraicReal r = refine(*this, pow2(-60));
  return r.lo.get_d() / 2 + r.hi.get_d() / 2;
}

AlgebraicReal make_algebraic_real(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  if (poly.degree() < 1) throw ValidationError("algebraic real needs a polynomial of degree >= 1");
  if (lo > hi) throw ValidationError("isolating interval has lo > hi");
  const IntPolynomial p = poly.primitive();
  if (p.degree() == 1) {
    Rational root(-p.coeff(0), p.coeff(1));
    root.canonicalize();
    if (root < lo || root > hi) throw ValidationError("interval does not contain the root of " + p.to_string());
    return AlgebraicReal{p, root, root, true};
  }
  if (p.degree() <= 3) {
    if (!is_irreducible_low_degree(p)) throw ValidationError("minimal polynomial " + p.to_string() + " is reducible over Q");
  } else if (squarefree_part(p).degree() != p.degree()) {
    throw ValidationError("minimal polynomial " + p.to_string() + " is not squarefree");
  }
  if (lo == hi) throw ValidationError("degenerate interval for an irrational root");
  const int s_lo = p.sign_at(lo);
  const int s_hi = p.sign_at(hi);
  if (s_lo == 0 || s_hi == 0 || s_lo * s_hi > 0 || count_roots_open(p, lo, hi) != 1) {
    throw ValidationError("[" + to_string(lo) + ", " + to_string(hi) + "] does not isolate a root of " + p.to_string());
  }
  return AlgebraicReal{p, lo, hi, true};
}

std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw ValidationError("isolate_real_roots of the zero polynomial");
  std::vector<AlgebraicReal> out;
  if (p.degree() == 0) return out;

  const IntPolynomial sqf = squarefree_part(p);
  RatPolynomial rest(sqf);
  for (const auto& r : rational_roots(sqf)) {
    const IntPolynomial lin({BigInt(-r.get_num()), BigInt(r.get_den())});
    out.push_back(AlgebraicReal{lin, r, r, true});
    rest = RatPolynomial::divmod(rest, RatPolynomial(lin)).first;
  }
  if (rest.degree() >= 2) {
    const IntPolynomial q = rest.to_primitive_int();
    const bool irreducible = q.degree() <= 3;
    const Rational b = cauchy_bound(q);
    isolate_irrational(q, -b, b, irreducible, out);
  }

  std::sort(out.begin(), out.end(), [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.lo < y.lo; });
  // Intervals from different factors may overlap; shrink until disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].hi >= out[i + 1].lo) {
        out[i] = refine(out[i], out[i].is_rational() ? Rational(1) : (out[i].hi - out[i].lo) / 2);
        out[i + 1] = refine(out[i + 1], out[i + 1].is_rational() ? Rational(1) : (out[i + 1].hi - out[i + 1].lo) / 2);
        changed = true;
      }
    }
    if (changed) {
      std::sort(out.begin(), out.end(), [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.lo < y.lo; });
    }
  }
  return out;
}

AlgebraicReal refine(const AlgebraicReal& r, const Rational& width) {
  if (width <= 0) throw ValidationError("refine width must be positive");
  AlgebraicReal out = r;
  Interval iv{r.lo, r.hi};
  while (iv.width() > width) iv = bisect(r.min_poly, iv, 1);
  out.lo = iv.lo;
  out.hi = iv.hi;
  return out;
}

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(AlgebraicReal generator)
    : generator_(std::move(generator)), monic_(RatPolynomial(generator_.min_poly).monic()) {
  const AlgebraicReal narrow = refine(generator_, pow2(-64));
  enclosure_ = Interval{narrow.lo, narrow.hi};
}

std::shared_ptr<const NumberField> NumberField::create(const AlgebraicReal& generator) {
  AlgebraicReal g = make_algebraic_real(generator.min_poly, generator.lo, generator.hi);
  g.irreducible = generator.irreducible;
  if (!g.irreducible) {
    throw ValidationError("cannot build a number field over " + g.min_poly.to_string() + " without an irreducibility certificate");
  }
  return std::shared_ptr<const NumberField>(new NumberField(std::move(g)));
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (!(generator_.min_poly == other.generator_.min_poly)) return false;
  const Rational lo = std::max(generator_.lo, other.generator_.lo);
  const Rational hi = std::min(generator_.hi, other.generator_.hi);
  if (lo > hi) return false;
  return generator_.min_poly.sign_at(lo) * generator_.min_poly.sign_at(hi) <= 0;
}

std::string NumberField::describe() const {
  return "Q[t]/(" + generator_.min_poly.to_string() + "), root in [" + to_string(generator_.lo) + ", " +
         to_string(generator_.hi) + "]";
}

// ---------------------------------------------------------------- FieldElement

namespace {

std::vector<Rational> reduce(const NumberField& field, std::vector<Rational> c) {
  const int deg = field.degree();
  const auto& m = field.monic_poly().coeffs();
  for (int k = static_cast<int>(c.size()) - 1; k >= deg; --k) {
    const Rational lead = c[static_cast<std::size_t>(k)];
    if (lead != 0) {
      for (int j = 0; j < deg; ++j) c[static_cast<std::size_t>(k - deg + j)] -= lead * m[static_cast<std::size_t>(j)];
    }
  }
  c.resize(static_cast<std::size_t>(deg), Rational(0));
  return c;
}

/// Field shared by a and b, embedding rational operands.
FieldPtr join_fields(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& fa = a.field();
  const FieldPtr& fb = b.field();
  if (fa == fb) return fa;
  const bool ra = a.is_rational();
  const bool rb = b.is_rational();
  if (ra && rb) return fa ? fa : fb;
  if (ra) return fb;
  if (rb) return fa;
  if (fa && fb && fa->same_as(*fb)) return fa;
  throw MismatchedField("operands belong to different number fields");
}

std::vector<Rational> coeffs_in(const FieldElement& a, const FieldPtr& field) {
  const std::size_t deg = field ? static_cast<std::size_t>(field->degree()) : 1;
  if (a.coeffs().size() == deg) return a.coeffs();
  std::vector<Rational> c(deg, Rational(0));
  c[0] = a.coeffs()[0];
  return c;
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  if (coeffs.empty()) coeffs.emplace_back(0);
  if (!field_) {
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0) throw ValidationError("coefficient vector of length > 1 without a declared field");
    }
    coeffs_ = {coeffs[0]};
    return;
  }
  coeffs_ = reduce(*field_, std::move(coeffs));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (!field) throw ValidationError("generator of Q requested");
  return FieldElement(field, {Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> FieldElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  FieldPtr f = join_fields(*this, b);
  std::vector<Rational> x = coeffs_in(*this, f);
  const std::vector<Rational> y = coeffs_in(b, f);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  field_ = std::move(f);
  coeffs_ = std::move(x);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  FieldPtr f = join_fields(*this, b);
  std::vector<Rational> x = coeffs_in(*this, f);
  const std::vector<Rational> y = coeffs_in(b, f);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
  field_ = std::move(f);
  coeffs_ = std::move(x);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  FieldPtr f = join_fields(*this, b);
  if (is_rational() || b.is_rational()) {
    // Scalar multiplication needs no reduction.
    const bool self_scalar = is_rational();
    const Rational s = self_scalar ? coeffs_[0] : b.coeffs_[0];
    std::vector<Rational> x = coeffs_in(self_scalar ? b : *this, f);
    for (auto& c : x) c *= s;
    field_ = std::move(f);
    coeffs_ = std::move(x);
    return *this;
  }
  const std::vector<Rational> x = coeffs_in(*this, f);
  const std::vector<Rational> y = coeffs_in(b, f);
  std::vector<Rational> prod(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
  }
  coeffs_ = reduce(*f, std::move(prod));
  field_ = std::move(f);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero field element");
  FieldPtr f = join_fields(*this, b);
  if (b.is_rational()) {
    std::vector<Rational> x = coeffs_in(*this, f);
    for (auto& c : x) c /= b.coeffs_[0];
    field_ = std::move(f);
    coeffs_ = std::move(x);
    return *this;
  }
  // Inverse of b via the extended Euclidean algorithm against the minimal polynomial.
  RatPolynomial r0 = f->monic_poly();
  RatPolynomial r1(coeffs_in(b, f));
  RatPolynomial s0;
  RatPolynomial s1(std::vector<Rational>{Rational(1)});
  while (r1.degree() > 0) {
    auto [quo, rem] = RatPolynomial::divmod(r0, r1);
    RatPolynomial s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the minimal polynomial is irreducible.
  const Rational c = r1.coeff(0);
  const RatPolynomial inv = (Rational(1) / c) * s1;
  *this *= FieldElement(f, inv.coeffs());
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return a.coeffs()[0] == b.coeffs()[0];
  return (a - b).is_zero();
}

std::string FieldElement::to_string() const {
  if (!field_) return thinray::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << thinray::to_string(coeffs_[k]) << ")";
    if (k >= 1) os << "*theta";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement& b) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return a / b;
  }
  throw ValidationError("unknown arithmetic operation");
}

Interval fe_enclosure(const FieldElement& a) {
  if (a.is_rational()) return {a.coeffs()[0], a.coeffs()[0]};
  return eval_interval(a.coeffs(), a.field()->enclosure());
}

int fe_sign(const FieldElement& a) {
  if (a.is_rational()) return sgn(a.coeffs()[0]);
  if (a.is_zero()) return 0;
  const NumberField& f = *a.field();
  Interval theta = f.enclosure();
  for (;;) {
    const Interval v = eval_interval(a.coeffs(), theta);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    theta = bisect(f.generator().min_poly, theta, 32);
  }
}

Approximation fe_approx(const FieldElement& a, const Rational& tol) {
  if (tol <= 0) throw ValidationError("fe_approx tolerance must be positive");
  if (a.is_rational()) return {a.coeffs()[0], Rational(0)};
  const NumberField& f = *a.field();
  Interval theta = f.enclosure();
  for (;;) {
    const Interval v = eval_interval(a.coeffs(), theta);
    if (v.width() <= 2 * tol) return {v.mid(), v.width() / 2};
    theta = bisect(f.generator().min_poly, theta, 16);
  }
}

Rational fe_upper(const FieldElement& a, const Rational& tol) {
  const auto ap = fe_approx(a, tol);
  return ap.value + ap.err;
}

Rational fe_lower(const FieldElement& a, const Rational& tol) {
  const auto ap = fe_approx(a, tol);
  return ap.value - ap.err;
}

std::string fe_decimal(const FieldElement& a, int digits) {
  return to_decimal(fe_approx(a, pow2(-4 * digits - 8)).value, digits);
}

FieldPtr common_field(std::span<const FieldElement> values) {
  FieldPtr out;
  for (const auto& v : values) {
    if (v.is_rational()) continue;
    if (!out) {
      out = v.field();
    } else if (out != v.field() && !out->same_as(*v.field())) {
      throw MismatchedField("values belong to different number fields");
    }
  }
  return out;
}

}  // namespace thinray
