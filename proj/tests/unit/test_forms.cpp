#include <gtest/gtest.h>

#include "instances.hpp"
#include "oracles.hpp"
#include "thinray/errors.hpp"
#include "thinray/forms.hpp"

using namespace thinray;
using namespace fixtures;

namespace {

struct RawCubic {
  int n;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> v;
  Rational c;
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

CubicObjective from_raw(const RawCubic& r) {
  const Vec a(r.a.begin(), r.a.end());
  const Vec b(r.b.begin(), r.b.end());
  return CubicObjective(SymTensor3::symmetrize(r.n, a), SymMatrix::symmetrize(r.n, b), LinVec(Vec(r.v.begin(), r.v.end())),
                        r.c);
}

QVec random_qvec(std::mt19937_64& g, int n, long num = 9, long den = 5) {
  QVec x;
  for (int i = 0; i < n; ++i) x.push_back(oracle::random_rational(g, num, den));
  return x;
}

SymTensor3 random_tensor(std::mt19937_64& g, int n) {
  SymTensor3 T(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) T.set(i, j, k, oracle::random_rational(g, 9, 4));
    }
  }
  return T;
}

SymMatrix random_matrix(std::mt19937_64& g, int n) {
  SymMatrix M(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) M.set(i, j, oracle::random_rational(g, 9, 4));
  }
  return M;
}

Rational sq_norm(const QVec& x) {
  Rational s = 0;
  for (const auto& v : x) s += v * v;
  return s;
}

}  // namespace

TEST(Symmetrize, RepeatedIndexSplit) {
  std::vector<FieldElement> raw(8);
  raw[0 * 4 + 0 * 2 + 1] = 6;
  const SymTensor3 T = SymTensor3::symmetrize(2, raw);
  EXPECT_EQ(T(0, 0, 1), FieldElement(2));
  EXPECT_EQ(T(0, 1, 0), FieldElement(2));
  EXPECT_EQ(T(1, 0, 0), FieldElement(2));
  EXPECT_TRUE(T(1, 1, 0).is_zero());
}

TEST(Symmetrize, Idempotent) {
  const SymTensor3 T = cubic_tensor();
  const SymTensor3 again = SymTensor3::symmetrize(3, T.entries());
  EXPECT_EQ(again.entries(), T.entries());
  SymMatrix M(2);
  M.set(0, 1, 5);
  EXPECT_EQ(SymMatrix::symmetrize(2, M.entries()).entries(), M.entries());
}

TEST(Symmetrize, MatrixMean) {
  const SymMatrix M = SymMatrix::symmetrize(2, {FieldElement(0), FieldElement(1), FieldElement(3), FieldElement(0)});
  EXPECT_EQ(M(0, 1), FieldElement(2));
  EXPECT_EQ(M(1, 0), FieldElement(2));
}

TEST(Symmetrize, WrongSizeThrows) {
  EXPECT_THROW(SymTensor3::symmetrize(2, std::vector<FieldElement>(7)), DimensionMismatch);
}

TEST(Trilinear, PaperValues) {
  const SymTensor3 T = cubic_tensor();
  const Vec d = cubic_direction();
  EXPECT_TRUE(eval_trilinear(T, d, d, d).is_zero());
  const Vec ones = to_vec({1, 1, 1});
  EXPECT_EQ(eval_trilinear(T, ones, ones, ones), FieldElement(1));
  const Vec zero = to_vec({0, 0, 0});
  EXPECT_TRUE(eval_trilinear(T, zero, ones, d).is_zero());
}

TEST(Bilinear, PaperValues) {
  const CubicObjective q = quadratic_objective();
  const Vec d = quadratic_direction();
  EXPECT_TRUE(eval_bilinear(q.M, d, d).is_zero());
  LinVec V(3);
  V.set(0, -1);
  EXPECT_EQ(eval_linear(V, cubic_direction()), -FieldElement::generator(cube_root_two()));
  SymMatrix D(2);
  D.set(0, 0, 1);
  D.set(1, 1, 2);
  EXPECT_EQ(eval_bilinear(D, to_vec({1, 1}), to_vec({1, 1})), FieldElement(3));
}

TEST(Contract, PaperDirectionAnnihilates) {
  const Vec tdd = contract(cubic_tensor(), cubic_direction(), cubic_direction());
  ASSERT_EQ(tdd.size(), 3u);
  for (const auto& v : tdd) EXPECT_TRUE(v.is_zero());
  // component formulas 2 d1^2 - 2 d2 d3, d2^2 - 2 d1 d3, 4 d3^2 - 2 d1 d2
  const Vec d = cubic_direction();
  EXPECT_TRUE((FieldElement(2) * d[0] * d[0] - FieldElement(2) * d[1] * d[2]).is_zero());
  EXPECT_TRUE((d[1] * d[1] - FieldElement(2) * d[0] * d[2]).is_zero());
  EXPECT_TRUE((FieldElement(4) * d[2] * d[2] - FieldElement(2) * d[0] * d[1]).is_zero());
  for (const auto& v : contract(cubic_tensor(), to_vec({0, 0, 0}), to_vec({0, 0, 0}))) EXPECT_TRUE(v.is_zero());
}

TEST(EvalCubic, PaperValues) {
  const CubicObjective f = cubic_objective();
  EXPECT_EQ(eval_cubic(f, to_vec({1, 1, 1})), FieldElement(0));
  EXPECT_EQ(eval_cubic(f, to_vec({4, 5, 3})), FieldElement(-3));
  EXPECT_EQ(eval_cubic(CubicObjective(3), to_vec({4, 5, 3})), FieldElement(0));
}

TEST(NormBound, PaperValues) {
  EXPECT_EQ(norm_bound(cubic_tensor()), 13);
  EXPECT_EQ(norm_bound(SymTensor3(3)), 0);
  LinVec V(3);
  V.set(0, -1);
  EXPECT_EQ(norm_bound(V), 1);
}

TEST(FormsProperty, PermutationInvariance) {
  auto g = oracle::rng(21);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const SymTensor3 T = random_tensor(g, n);
    const Vec x = to_vec(random_qvec(g, n));
    const Vec y = to_vec(random_qvec(g, n));
    const Vec z = to_vec(random_qvec(g, n));
    const FieldElement ref = eval_trilinear(T, x, y, z);
    EXPECT_EQ(eval_trilinear(T, x, z, y), ref);
    EXPECT_EQ(eval_trilinear(T, y, x, z), ref);
    EXPECT_EQ(eval_trilinear(T, y, z, x), ref);
    EXPECT_EQ(eval_trilinear(T, z, x, y), ref);
    EXPECT_EQ(eval_trilinear(T, z, y, x), ref);
  }
}

TEST(FormsProperty, SymmetrizationEvaluationIdentity) {
  auto g = oracle::rng(22);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const RawCubic raw = random_raw(g, n);
    const oracle::Poly p = oracle::expand(n, raw.a, raw.b, raw.v, raw.c);
    const CubicObjective f = from_raw(raw);
    const QVec x = random_qvec(g, n);
    EXPECT_EQ(eval_cubic(f, to_vec(x)), FieldElement(p.eval(x)));
  }
}

TEST(FormsProperty, ContractionConsistency) {
  auto g = oracle::rng(23);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const SymTensor3 T = random_tensor(g, n);
    const SymMatrix M = random_matrix(g, n);
    const Vec x = to_vec(random_qvec(g, n));
    const Vec d = to_vec(random_qvec(g, n));
    EXPECT_EQ(dot(x, contract(T, d, d)), eval_trilinear(T, x, d, d));
    EXPECT_EQ(dot(x, contract(M, d)), eval_bilinear(M, x, d));
    const SymMatrix Td = contract(T, d);
    EXPECT_EQ(eval_bilinear(Td, x, d), eval_trilinear(T, x, d, d));
  }
}

TEST(FormsProperty, ContractionOverNumberField) {
  auto g = oracle::rng(24);
  const FieldElement th = FieldElement::generator(cube_root_two());
  for (int it = 0; it < 50; ++it) {
    const SymTensor3 T = random_tensor(g, 3);
    Vec d;
    for (int i = 0; i < 3; ++i) d.push_back(FieldElement(oracle::random_rational(g, 5, 3)) + FieldElement(oracle::random_rational(g, 5, 3)) * th);
    const Vec x = to_vec(random_qvec(g, 3));
    EXPECT_EQ(dot(x, contract(T, d, d)), eval_trilinear(T, x, d, d));
  }
}

TEST(FormsProperty, NormSoundness) {
  auto g = oracle::rng(25);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(oracle::uniform(g, 1, 4));
    const SymTensor3 T = random_tensor(g, n);
    const SymMatrix M = random_matrix(g, n);
    const QVec x = random_qvec(g, n);
    const QVec y = random_qvec(g, n);
    const QVec z = random_qvec(g, n);
    const Rational t = *eval_trilinear(T, to_vec(x), to_vec(y), to_vec(z)).as_rational();
    const Rational nT = norm_bound(T);
    EXPECT_LE(t * t, nT * nT * sq_norm(x) * sq_norm(y) * sq_norm(z));
    const Rational m = *eval_bilinear(M, to_vec(x), to_vec(y)).as_rational();
    const Rational nM = norm_bound(M);
    EXPECT_LE(m * m, nM * nM * sq_norm(x) * sq_norm(y));
  }
}

TEST(Objective, FieldDetection) {
  EXPECT_TRUE(cubic_objective().is_rational());
  EXPECT_EQ(cubic_objective().field(), nullptr);
  EXPECT_FALSE(quadratic_objective().is_rational());
  EXPECT_TRUE(quadratic_objective().field()->same_as(*sqrt_two()));
}
