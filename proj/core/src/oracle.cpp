#include "thinray/oracle.hpp"

#include "thinray/errors.hpp"

namespace thinray {

IntegerEvaluator::IntegerEvaluator(const CubicObjective& f) : f_(&f), rational_(f.is_rational()) {
  if (!rational_) return;
  for (const auto& e : f.T.entries()) T_.push_back(e.coeffs()[0]);
  for (const auto& e : f.M.entries()) M_.push_back(e.coeffs()[0]);
  for (const auto& e : f.V.values()) V_.push_back(e.coeffs()[0]);
  c_ = f.c.coeffs()[0];
}

FieldElement IntegerEvaluator::operator()(const IntVec& x) const {
  const std::size_t n = static_cast<std::size_t>(f_->dim());
  if (x.size() != n) throw DimensionMismatch("evaluation point has wrong dimension");
  if (!rational_) return eval_cubic(*f_, to_vec(x));
  Rational acc = c_;
  Rational row;
  Rational inner;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    row = V_[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] == 0) continue;
      inner = M_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& t = T_[(i * n + j) * n + k];
        if (t != 0 && x[k] != 0) inner += t * x[k];
      }
      row += inner * x[j];
    }
    acc += row * x[i];
  }
  return acc;
}

int compare(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) {
    const int c = cmp(a.coeffs()[0], b.coeffs()[0]);
    return (c > 0) - (c < 0);
  }
  return fe_sign(a - b);
}

namespace {

void enumerate(const HPolyhedron& P, long R, std::size_t i, IntVec& x, QVec& slack,
               const std::function<void(const IntVec&)>& visit, EnumOrder order) {
  const std::size_t n = x.size();
  if (i == n) {
    visit(x);
    return;
  }
  // Bounds on x_i from each row, with later coordinates at their most
  // favourable box value.
  Rational lo = -R;
  Rational hi = R;
  for (std::size_t r = 0; r < P.rows(); ++r) {
    const Rational& a = P.A()[r][i];
    if (a == 0) continue;
    Rational room = slack[r];
    for (std::size_t j = i + 1; j < n; ++j) room += abs_of(P.A()[r][j]) * R;
    const Rational bound = room / a;
    if (a > 0) {
      if (bound < hi) hi = bound;
    } else if (bound > lo) {
      lo = bound;
    }
  }
  const BigInt first = ceil_of(lo);
  const BigInt last = floor_of(hi);
  if (first > last) return;
  const auto step = [&](const BigInt& v) {
    x[i] = v;
    for (std::size_t r = 0; r < P.rows(); ++r) slack[r] -= P.A()[r][i] * v;
    enumerate(P, R, i + 1, x, slack, visit, order);
    for (std::size_t r = 0; r < P.rows(); ++r) slack[r] += P.A()[r][i] * v;
  };
  if (order == EnumOrder::Lex) {
    for (BigInt v = first; v <= last; ++v) step(v);
  } else {
    for (BigInt v = last; v >= first; --v) step(v);
  }
}

}  // namespace

void for_each_point(const HPolyhedron& P, long R, const std::function<void(const IntVec&)>& visit, EnumOrder order) {
  if (R < 0) throw ValidationError("enumeration radius must be >= 0");
  IntVec x(static_cast<std::size_t>(P.dim()), BigInt(0));
  QVec slack = P.b();
  enumerate(P, R, 0, x, slack, [&](const IntVec& p) {
    if (contains(P, p)) visit(p);
  }, order);
}

std::vector<IntVec> integer_points(const HPolyhedron& P, long R) {
  std::vector<IntVec> out;
  for_each_point(P, R, [&](const IntVec& x) { out.push_back(x); });
  return out;
}

OracleResult enumerate_min(const CubicObjective& f, const HPolyhedron& P, long R, EnumOrder order) {
  if (f.dim() != P.dim()) throw DimensionMismatch("objective and polyhedron dimensions differ");
  const IntegerEvaluator eval(f);
  OracleResult res;
  for_each_point(P, R, [&](const IntVec& x) {
    FieldElement v = eval(x);
    ++res.count;
    if (res.count == 1) {
      res.min = std::move(v);
      res.argmin = x;
      return;
    }
    const int c = compare(v, res.min);
    if (c < 0 || (c == 0 && x < res.argmin)) {
      res.min = std::move(v);
      res.argmin = x;
    }
  }, order);
  if (res.count == 0) throw EmptyIntersection("no integer point of P in the box of radius " + std::to_string(R));
  return res;
}

TrendReport trend(const CubicObjective& f, const HPolyhedron& P, const std::vector<long>& radii) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1]) throw ValidationError("trend radii must be strictly increasing");
  }
  TrendReport rep;
  rep.radii = radii;
  for (long R : radii) {
    try {
      OracleResult r = enumerate_min(f, P, R);
      if (!rep.minima.empty() && rep.minima.back() && compare(r.min, *rep.minima.back()) > 0) rep.nonincreasing = false;
      rep.minima.emplace_back(std::move(r.min));
      rep.argmins.emplace_back(std::move(r.argmin));
      rep.counts.push_back(r.count);
    } catch (const EmptyIntersection&) {
      rep.minima.emplace_back(std::nullopt);
      rep.argmins.emplace_back(std::nullopt);
      rep.counts.push_back(0);
    }
  }
  return rep;
}

}  // namespace thinray
