#pragma once

#include <vector>

#include "thinray/algebraic.hpp"
#include "thinray/rational.hpp"

namespace thinray {

/// Vector whose entries may be rational or lie in a common number field.
using Vec = std::vector<FieldElement>;

Vec to_vec(const QVec& v);
Vec to_vec(const IntVec& v);
Vec to_vec(std::initializer_list<long> v);

FieldElement dot(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const FieldElement& s, const Vec& x);
bool is_zero_vec(const Vec& x);
FieldPtr common_field(const Vec& x);

/// Fully symmetric n x n x n tensor stored densely; every write goes to all
/// index permutations.
class SymTensor3 {
 public:
  explicit SymTensor3(int n = 0);

  /// T_ijk = (1/6) sum over the six index permutations of raw[i][j][k]
  /// (raw is row-major, n^3 entries).
  static SymTensor3 symmetrize(int n, const std::vector<FieldElement>& raw);

  int dim() const { return n_; }
  const FieldElement& operator()(int i, int j, int k) const { return e_[index(i, j, k)]; }
  void set(int i, int j, int k, const FieldElement& v);
  bool is_zero() const;
  const std::vector<FieldElement>& entries() const { return e_; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  int n_;
  std::vector<FieldElement> e_;
};

class SymMatrix {
 public:
  explicit SymMatrix(int n = 0);

  /// M_ij = (raw_ij + raw_ji) / 2 (raw row-major, n^2 entries).
  static SymMatrix symmetrize(int n, const std::vector<FieldElement>& raw);

  int dim() const { return n_; }
  const FieldElement& operator()(int i, int j) const { return e_[index(i, j)]; }
  void set(int i, int j, const FieldElement& v);
  bool is_zero() const;
  const std::vector<FieldElement>& entries() const { return e_; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_;
  std::vector<FieldElement> e_;
};

class LinVec {
 public:
  explicit LinVec(int n = 0) : v_(static_cast<std::size_t>(n)) {}
  explicit LinVec(Vec v) : v_(std::move(v)) {}

  int dim() const { return static_cast<int>(v_.size()); }
  const FieldElement& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  void set(int i, const FieldElement& v) { v_[static_cast<std::size_t>(i)] = v; }
  bool is_zero() const { return is_zero_vec(v_); }
  const Vec& values() const { return v_; }

 private:
  Vec v_;
};

/// f(x) = T[x,x,x] + M[x,x] + V[x] + c.
struct CubicObjective {
  SymTensor3 T;
  SymMatrix M;
  LinVec V;
  FieldElement c;

  explicit CubicObjective(int n = 0) : T(n), M(n), V(n) {}
  CubicObjective(SymTensor3 t, SymMatrix m, LinVec v, FieldElement constant);

  int dim() const { return T.dim(); }
  /// True when every coefficient is rational.
  bool is_rational() const;
  /// Field of the irrational coefficients (null for rational objectives).
  FieldPtr field() const;
};

FieldElement eval_trilinear(const SymTensor3& T, const Vec& x, const Vec& y, const Vec& z);
FieldElement eval_bilinear(const SymMatrix& M, const Vec& x, const Vec& y);
FieldElement eval_linear(const LinVec& V, const Vec& x);

/// (T[d,e])_i = sum_jk T_ijk d_j e_k.
Vec contract(const SymTensor3& T, const Vec& d, const Vec& e);
/// (T[d])_ij = sum_k T_ijk d_k.
SymMatrix contract(const SymTensor3& T, const Vec& d);
/// (M[d])_i = sum_j M_ij d_j.
Vec contract(const SymMatrix& M, const Vec& d);

FieldElement eval_cubic(const CubicObjective& f, const Vec& x);

/// Entrywise absolute sum N1 (rational upper bound for irrational entries).
/// |T[x,y,z]| <= N1(T) |x| |y| |z| for Euclidean norms, likewise for M, V.
Rational norm_bound(const SymTensor3& T);
Rational norm_bound(const SymMatrix& M);
Rational norm_bound(const LinVec& V);

}  // namespace thinray
