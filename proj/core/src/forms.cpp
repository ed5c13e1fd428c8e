#include "thinray/forms.hpp"

#include <algorithm>

#include "thinray/errors.hpp"

namespace thinray {

namespace {

void require_dim(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n)) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(n) + ", got " +
                            std::to_string(got));
  }
}

Rational abs_upper(const FieldElement& e) {
  if (auto r = e.as_rational()) return abs_of(*r);
  const auto ap = fe_approx(e, Rational(1, 1 << 30));
  return abs_of(ap.value) + ap.err;
}

}  // namespace

Vec to_vec(const QVec& v) { return Vec(v.begin(), v.end()); }

Vec to_vec(const IntVec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Vec to_vec(std::initializer_list<long> v) {
  Vec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

FieldElement dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot: length mismatch");
  FieldElement acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    acc += x[i] * y[i];
  }
  return acc;
}

Vec add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("add: length mismatch");
  Vec out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

Vec sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("sub: length mismatch");
  Vec out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

Vec scale(const FieldElement& s, const Vec& x) {
  Vec out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(s * v);
  return out;
}

bool is_zero_vec(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldElement& v) { return v.is_zero(); });
}

FieldPtr common_field(const Vec& x) { return common_field(std::span<const FieldElement>(x)); }

// ---------------------------------------------------------------- SymTensor3

SymTensor3::SymTensor3(int n) : n_(n), e_(static_cast<std::size_t>(n) * n * n) {
  if (n < 0) throw DimensionMismatch("negative tensor dimension");
}

SymTensor3 SymTensor3::symmetrize(int n, const std::vector<FieldElement>& raw) {
  require_dim(raw.size(), n * n * n, "symmetrize_tensor");
  SymTensor3 t(n);
  auto at = [&](int i, int j, int k) -> const FieldElement& {
    return raw[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        FieldElement s = at(i, j, k) + at(i, k, j) + at(j, i, k) + at(j, k, i) + at(k, i, j) + at(k, j, i);
        t.e_[t.index(i, j, k)] = s / FieldElement(6);
      }
    }
  }
  return t;
}

void SymTensor3::set(int i, int j, int k, const FieldElement& v) {
  const int p[3] = {i, j, k};
  for (int a = 0; a < 3; ++a) {
    if (p[a] < 0 || p[a] >= n_) throw DimensionMismatch("tensor index out of range");
  }
  e_[index(i, j, k)] = v;
  e_[index(i, k, j)] = v;
  e_[index(j, i, k)] = v;
  e_[index(j, k, i)] = v;
  e_[index(k, i, j)] = v;
  e_[index(k, j, i)] = v;
}

bool SymTensor3::is_zero() const { return is_zero_vec(e_); }

// ---------------------------------------------------------------- SymMatrix

SymMatrix::SymMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw DimensionMismatch("negative matrix dimension");
}

SymMatrix SymMatrix::symmetrize(int n, const std::vector<FieldElement>& raw) {
  require_dim(raw.size(), n * n, "symmetrize_matrix");
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& a = raw[static_cast<std::size_t>(i) * n + j];
      const auto& b = raw[static_cast<std::size_t>(j) * n + i];
      m.e_[m.index(i, j)] = (a + b) / FieldElement(2);
    }
  }
  return m;
}

void SymMatrix::set(int i, int j, const FieldElement& v) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DimensionMismatch("matrix index out of range");
  e_[index(i, j)] = v;
  e_[index(j, i)] = v;
}

bool SymMatrix::is_zero() const { return is_zero_vec(e_); }

// ---------------------------------------------------------------- CubicObjective

CubicObjective::CubicObjective(SymTensor3 t, SymMatrix m, LinVec v, FieldElement constant)
    : T(std::move(t)), M(std::move(m)), V(std::move(v)), c(std::move(constant)) {
  if (M.dim() != T.dim() || V.dim() != T.dim()) throw DimensionMismatch("objective components disagree on dimension");
  field();  // rejects coefficients from different fields
}

bool CubicObjective::is_rational() const { return field() == nullptr; }

FieldPtr CubicObjective::field() const {
  std::vector<FieldElement> all;
  all.reserve(T.entries().size() + M.entries().size() + V.values().size() + 1);
  all.insert(all.end(), T.entries().begin(), T.entries().end());
  all.insert(all.end(), M.entries().begin(), M.entries().end());
  all.insert(all.end(), V.values().begin(), V.values().end());
  all.push_back(c);
  return common_field(std::span<const FieldElement>(all));
}

// ---------------------------------------------------------------- evaluation

FieldElement eval_trilinear(const SymTensor3& T, const Vec& x, const Vec& y, const Vec& z) {
  const int n = T.dim();
  require_dim(x.size(), n, "eval_trilinear");
  require_dim(y.size(), n, "eval_trilinear");
  require_dim(z.size(), n, "eval_trilinear");
  FieldElement acc;
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    FieldElement row;
    for (int j = 0; j < n; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      FieldElement inner;
      for (int k = 0; k < n; ++k) {
        const FieldElement& t = T(i, j, k);
        if (t.is_zero() || z[static_cast<std::size_t>(k)].is_zero()) continue;
        inner += t * z[static_cast<std::size_t>(k)];
      }
      if (!inner.is_zero()) row += inner * y[static_cast<std::size_t>(j)];
    }
    if (!row.is_zero()) acc += row * x[static_cast<std::size_t>(i)];
  }
  return acc;
}

FieldElement eval_bilinear(const SymMatrix& M, const Vec& x, const Vec& y) {
  const int n = M.dim();
  require_dim(x.size(), n, "eval_bilinear");
  require_dim(y.size(), n, "eval_bilinear");
  FieldElement acc;
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    FieldElement row;
    for (int j = 0; j < n; ++j) {
      const FieldElement& m = M(i, j);
      if (m.is_zero() || y[static_cast<std::size_t>(j)].is_zero()) continue;
      row += m * y[static_cast<std::size_t>(j)];
    }
    if (!row.is_zero()) acc += row * x[static_cast<std::size_t>(i)];
  }
  return acc;
}

FieldElement eval_linear(const LinVec& V, const Vec& x) {
  require_dim(x.size(), V.dim(), "eval_linear");
  return dot(V.values(), x);
}

Vec contract(const SymTensor3& T, const Vec& d, const Vec& e) {
  const int n = T.dim();
  require_dim(d.size(), n, "contract");
  require_dim(e.size(), n, "contract");
  Vec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    FieldElement acc;
    for (int j = 0; j < n; ++j) {
      if (d[static_cast<std::size_t>(j)].is_zero()) continue;
      FieldElement inner;
      for (int k = 0; k < n; ++k) {
        const FieldElement& t = T(i, j, k);
        if (t.is_zero() || e[static_cast<std::size_t>(k)].is_zero()) continue;
        inner += t * e[static_cast<std::size_t>(k)];
      }
      if (!inner.is_zero()) acc += inner * d[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

SymMatrix contract(const SymTensor3& T, const Vec& d) {
  const int n = T.dim();
  require_dim(d.size(), n, "contract");
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      FieldElement acc;
      for (int k = 0; k < n; ++k) {
        const FieldElement& t = T(i, j, k);
        if (t.is_zero() || d[static_cast<std::size_t>(k)].is_zero()) continue;
        acc += t * d[static_cast<std::size_t>(k)];
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

Vec contract(const SymMatrix& M, const Vec& d) {
  const int n = M.dim();
  require_dim(d.size(), n, "contract");
  Vec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    FieldElement acc;
    for (int j = 0; j < n; ++j) {
      const FieldElement& m = M(i, j);
      if (m.is_zero() || d[static_cast<std::size_t>(j)].is_zero()) continue;
      acc += m * d[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

FieldElement eval_cubic(const CubicObjective& f, const Vec& x) {
  require_dim(x.size(), f.dim(), "eval_cubic");
  return eval_trilinear(f.T, x, x, x) + eval_bilinear(f.M, x, x) + eval_linear(f.V, x) + f.c;
}

Rational norm_bound(const SymTensor3& T) {
  Rational s = 0;
  for (const auto& e : T.entries()) s += abs_upper(e);
  return s;
}

Rational norm_bound(const SymMatrix& M) {
  Rational s = 0;
  for (const auto& e : M.entries()) s += abs_upper(e);
  return s;
}

Rational norm_bound(const LinVec& V) {
  Rational s = 0;
  for (const auto& e : V.values()) s += abs_upper(e);
  return s;
}

}  // namespace thinray
