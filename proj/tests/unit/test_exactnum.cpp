#include <gtest/gtest.h>

#include "instances.hpp"
#include "oracles.hpp"
#include "thinray/algebraic.hpp"
#include "thinray/errors.hpp"
#include "thinray/polynomial.hpp"
#include "thinray/rational.hpp"

using namespace thinray;
using fixtures::cube_root_two;
using fixtures::sqrt_two;

namespace {

FieldElement random_element(std::mt19937_64& g, const FieldPtr& F) {
  std::vector<Rational> c;
  for (int i = 0; i < F->degree(); ++i) c.push_back(oracle::random_rational(g, 20, 9));
  return FieldElement(F, c);
}

oracle::Modulus modulus_of(const FieldPtr& F) {
  oracle::Modulus m;
  for (const auto& c : F->generator().min_poly.coeffs()) m.m.push_back(Rational(c) / Rational(F->generator().min_poly.leading()));
  return m;
}

oracle::Qt to_qt(const FieldElement& a, const oracle::Modulus& mod) {
  oracle::Qt q = oracle::qt_const(0, mod);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) q.c[i] = a.coeffs()[i];
  return q;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Rational, FloorCeilRound) {
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(round_of(Rational(5, 2)), 3);
  EXPECT_EQ(round_of(Rational(-5, 2)), -2);
  EXPECT_EQ(floor_of(Rational(6)), 6);
}

TEST(Rational, SqrtUpperBracketsRoot) {
  auto g = oracle::rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational x = abs_of(oracle::random_rational(g, 10000, 97));
    const Rational s = sqrt_upper(x);
    EXPECT_GE(s * s, x);
    EXPECT_LE(s * s, x * Rational(65537, 65536) * Rational(65537, 65536));
  }
  EXPECT_EQ(sqrt_upper(0), 0);
}

TEST(Polynomial, ParseAndEvaluate) {
  const IntPolynomial p = parse_int_polynomial("2*t^3 - t + 1");
  EXPECT_EQ(p, IntPolynomial({1, -1, 0, 2}));
  EXPECT_EQ(p.eval(Rational(2)), 15);
  EXPECT_EQ(parse_int_polynomial("-3"), IntPolynomial({-3}));
  EXPECT_EQ(parse_int_polynomial("t^2"), IntPolynomial({0, 0, 1}));
  EXPECT_THROW(parse_int_polynomial("t^"), ParseError);
  EXPECT_THROW(parse_int_polynomial("2**t"), ParseError);
}

TEST(Polynomial, SquarefreePartOfSquare) {
  const IntPolynomial p({4, 0, 0, -4, 0, 0, 1});
  EXPECT_EQ(squarefree_part(p), IntPolynomial({-2, 0, 0, 1}));
  const IntPolynomial c({-2, 0, 0, 1});
  EXPECT_EQ(c * c, p);
}

TEST(Polynomial, RationalRootsAndIrreducibility) {
  EXPECT_EQ(rational_roots(IntPolynomial({-1, 0, 4})), (std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
  EXPECT_TRUE(is_irreducible_low_degree(IntPolynomial({-2, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible_low_degree(IntPolynomial({-1, 0, 1})));
}

TEST(FieldArith, CubeRootProducts) {
  const FieldPtr F = cube_root_two();
  const FieldElement th = FieldElement::generator(F);
  const FieldElement p = field_arith(ArithOp::Mul, th, th * th);
  EXPECT_EQ(p.coeffs(), (std::vector<Rational>{2, 0, 0}));
  EXPECT_TRUE(field_arith(ArithOp::Mul, th - th, th + FieldElement(7)).is_zero());
}

TEST(FieldArith, SqrtTwoConjugates) {
  const FieldElement th = FieldElement::generator(sqrt_two());
  const FieldElement p = field_arith(ArithOp::Mul, FieldElement(1) + th, FieldElement(1) - th);
  ASSERT_TRUE(p.as_rational().has_value());
  EXPECT_EQ(*p.as_rational(), -1);
}

TEST(FieldArith, DivisionInverts) {
  auto g = oracle::rng(5);
  const FieldPtr F = cube_root_two();
  for (int i = 0; i < 50; ++i) {
    const FieldElement a = random_element(g, F);
    if (a.is_zero()) continue;
    EXPECT_EQ(a / a, FieldElement(1));
  }
  EXPECT_THROW(FieldElement::generator(F) / FieldElement(0), DivisionByZero);
}

TEST(FieldArith, MismatchedFieldsThrow) {
  const FieldElement a = FieldElement::generator(cube_root_two());
  const FieldElement b = FieldElement::generator(sqrt_two());
  EXPECT_THROW(a + b, MismatchedField);
  EXPECT_NO_THROW(a + FieldElement(3));
}

TEST(FieldArith, RingAxiomsRandomized) {
  auto g = oracle::rng(7);
  for (const FieldPtr& F : {cube_root_two(), sqrt_two()}) {
    const oracle::Modulus mod = modulus_of(F);
    for (int i = 0; i < 200; ++i) {
      const FieldElement a = random_element(g, F);
      const FieldElement b = random_element(g, F);
      const FieldElement c = random_element(g, F);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      const oracle::Qt ref = oracle::mul(to_qt(a, mod), to_qt(b, mod), mod);
      EXPECT_EQ((a * b).coeffs(), ref.c);
    }
  }
}

TEST(FieldArith, GeneratorPowerMatchesReduction) {
  for (const FieldPtr& F : {cube_root_two(), sqrt_two()}) {
    const FieldElement th = FieldElement::generator(F);
    FieldElement p(1);
    for (int i = 0; i < F->degree(); ++i) p = p * th;
    const oracle::Modulus mod = modulus_of(F);
    oracle::QV tk(static_cast<std::size_t>(F->degree()) + 1, Rational(0));
    tk.back() = 1;
    EXPECT_EQ(p.coeffs(), oracle::reduce(tk, mod).c);
  }
}

TEST(FeSign, PaperValues) {
  const FieldElement th = FieldElement::generator(cube_root_two());
  EXPECT_EQ(fe_sign(-th), -1);
  EXPECT_EQ(fe_sign(FieldElement()), 0);
  EXPECT_EQ(fe_sign(th * th - th), 1);
}

TEST(FeSign, AgreesWithIndependentIntervals) {
  auto g = oracle::rng(13);
  for (const FieldPtr& F : {cube_root_two(), sqrt_two()}) {
    const oracle::Modulus mod = modulus_of(F);
    oracle::QV mp;
    for (const auto& c : F->generator().min_poly.coeffs()) mp.push_back(Rational(c));
    for (int i = 0; i < 100; ++i) {
      const FieldElement a = random_element(g, F);
      const int s = fe_sign(a);
      EXPECT_EQ(s, oracle::sign(to_qt(a, mod), mp, {1, 2}));
      EXPECT_EQ(s == 0, (a - a * FieldElement(1)).is_zero() && a.is_zero());
      const Approximation ap = fe_approx(a, Rational(1, 1000000000));
      if (abs_of(ap.value) > ap.err) {
        EXPECT_EQ(s, sign_of(ap.value));
      }
    }
  }
}

TEST(FeApprox, WithinTolerance) {
  const FieldElement th3 = FieldElement::generator(cube_root_two());
  const Approximation a = fe_approx(th3, Rational(1, 100));
  EXPECT_LE(a.err, Rational(1, 100));
  const oracle::RootBox box = oracle::bisect_root({-2, 0, 0, 1}, 1, 2, 60);
  EXPECT_LE(abs_of(a.value - box.lo), Rational(1, 100) + (box.hi - box.lo));

  const Approximation b = fe_approx(FieldElement(Rational(3, 7)), Rational(1, 5));
  EXPECT_EQ(b.value, Rational(3, 7));
  EXPECT_EQ(b.err, 0);

  const Approximation c = fe_approx(FieldElement::generator(sqrt_two()), Rational(1, 1000));
  const oracle::RootBox box2 = oracle::bisect_root({-2, 0, 1}, 1, 2, 60);
  EXPECT_LE(abs_of(c.value - box2.lo), Rational(1, 1000) + (box2.hi - box2.lo));
}

TEST(FeBounds, UpperAndLowerBracket) {
  const FieldElement x = FieldElement::generator(sqrt_two()) * FieldElement(Rational(-3, 2)) + FieldElement(2);
  const Rational u = fe_upper(x);
  const Rational l = fe_lower(x);
  EXPECT_LE(l, u);
  EXPECT_LT(u - l, Rational(1, 1 << 19));
  EXPECT_EQ(fe_sign(x - FieldElement(u)), -1);
  EXPECT_EQ(fe_sign(x - FieldElement(l)), 1);
}

TEST(RootIsolation, Examples) {
  const auto r1 = isolate_real_roots(IntPolynomial({-2, 0, 0, 1}));
  ASSERT_EQ(r1.size(), 1u);
  const AlgebraicReal c = refine(r1[0], Rational(1, 1024));
  EXPECT_GE(c.lo, 1);
  EXPECT_LE(c.hi, 2);
  EXPECT_LT(c.lo, r1[0].hi);

  const auto r2 = isolate_real_roots(IntPolynomial({4, 0, 0, -4, 0, 0, 1}));
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r2[0].min_poly, IntPolynomial({-2, 0, 0, 1}));

  EXPECT_TRUE(isolate_real_roots(IntPolynomial({1, 0, 1})).empty());
}

TEST(RootIsolation, RationalRootsAreExact) {
  const auto r = isolate_real_roots(IntPolynomial({-6, 11, -6, 1}));
  ASSERT_EQ(r.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(r[i].is_rational());
    EXPECT_EQ(r[i].lo, Rational(static_cast<long>(i) + 1));
  }
}

TEST(RootIsolation, CountMatchesDenseSignScan) {
  auto g = oracle::rng(17);
  int checked = 0;
  while (checked < 60) {
    std::vector<BigInt> c;
    const long deg = oracle::uniform(g, 1, 5);
    for (long i = 0; i <= deg; ++i) c.emplace_back(oracle::uniform(g, -6, 6));
    if (c.back() == 0) continue;
    const IntPolynomial p(c);
    const IntPolynomial sf = squarefree_part(p);
    // distinct real roots of p = sign changes of its (squarefree) part across
    // the Cauchy interval, zeros skipped
    BigInt maxc = 0;
    for (const auto& v : sf.coeffs()) maxc = std::max(maxc, BigInt(abs(v)));
    const Rational B = Rational(1) + Rational(maxc) / Rational(abs(sf.leading()));
    const long steps = static_cast<long>(floor_of(B * 2 * 1024).get_si()) + 1;
    int changes = 0;
    int prev = sf.sign_at(-B);
    for (long s = 1; s <= steps; ++s) {
      const int cur = sf.sign_at(-B + Rational(s, 1024));
      if (cur == 0) continue;
      if (prev != 0 && cur != prev) ++changes;
      prev = cur;
    }
    const auto roots = isolate_real_roots(p);
    EXPECT_EQ(static_cast<int>(roots.size()), changes) << p.to_string();
    for (std::size_t i = 1; i < roots.size(); ++i) EXPECT_LT(roots[i - 1].hi, roots[i].lo);
    ++checked;
  }
}

TEST(Refine, NarrowsAndKeepsRoot) {
  const AlgebraicReal r = make_algebraic_real(IntPolynomial({-2, 0, 0, 1}), 1, 2);
  const AlgebraicReal n = refine(r, Rational(1, 4));
  EXPECT_LE(n.hi - n.lo, Rational(1, 4));
  EXPECT_LE(n.lo * n.lo * n.lo, 2);
  EXPECT_GE(n.hi * n.hi * n.hi, 2);
  const AlgebraicReal same = refine(n, Rational(1));
  EXPECT_EQ(same.lo, n.lo);
  EXPECT_EQ(same.hi, n.hi);
  const AlgebraicReal s = refine(make_algebraic_real(IntPolynomial({-2, 0, 1}), 1, 2), Rational(1, 100));
  EXPECT_LE(s.hi - s.lo, Rational(1, 100));
  EXPECT_LE(s.lo, Rational(141421, 100000));
  EXPECT_GE(s.hi, Rational(141421, 100000));
}

TEST(AlgebraicReal, Validation) {
  EXPECT_THROW(make_algebraic_real(IntPolynomial({-1, 0, 1}), -2, 2), ValidationError);
  EXPECT_THROW(make_algebraic_real(IntPolynomial({-2, 0, 0, 1}), 2, 3), ValidationError);
  EXPECT_THROW(make_algebraic_real(IntPolynomial({-4, 0, 1}), 1, 3), ValidationError);
}
