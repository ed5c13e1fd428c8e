#include <benchmark/benchmark.h>

#include <sstream>
#include <string>
#include <vector>

#include "thinray/algebraic.hpp"
#include "thinray/cli/commands.hpp"
#include "thinray/diophantine.hpp"
#include "thinray/oracle.hpp"
#include "thinray/rayanalysis.hpp"

using namespace thinray;

namespace {

FieldPtr cube_root_two() {
  static const FieldPtr f = NumberField::create(make_algebraic_real(IntPolynomial({-2, 0, 0, 1}), 1, 2));
  return f;
}

CubicObjective cubic_objective() {
  CubicObjective f(3);
  f.T.set(0, 0, 0, 2);
  f.T.set(1, 1, 1, 1);
  f.T.set(2, 2, 2, 4);
  f.T.set(0, 1, 2, -1);
  f.V.set(0, -1);
  return f;
}

HPolyhedron cubic_cone() {
  QMatrix A = {{-1, 0, 1}, {1, 0, -2}, {0, -1, 1}, {0, 1, -2}, {0, 0, -1}};
  return HPolyhedron(3, A, QVec(5, Rational(0)));
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "thinray");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

static void BM_FieldMultiply(benchmark::State& state) {
  const FieldElement th = FieldElement::generator(cube_root_two());
  const FieldElement a = th * th + FieldElement(Rational(3, 7)) * th - FieldElement(5);
  const FieldElement b = FieldElement(Rational(-2, 9)) * th * th + th + FieldElement(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMultiply);

static void BM_FieldSign(benchmark::State& state) {
  const FieldElement th = FieldElement::generator(cube_root_two());
  // 2^(1/3) = 1.25992...
  const FieldElement a = FieldElement(Rational(12599, 10000)) - th;
  for (auto _ : state) benchmark::DoNotOptimize(fe_sign(a));
}
BENCHMARK(BM_FieldSign);

static void BM_CurveScan(benchmark::State& state) {
  const CubicObjective f = cubic_objective();
  const Curve c{{IntPolynomial({0, 1}), IntPolynomial({0, 0, 1}), IntPolynomial({1})}, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(curve_critical_directions(f, c));
}
BENCHMARK(BM_CurveScan);

static void BM_SimultaneousApprox(benchmark::State& state) {
  const FieldElement th = FieldElement::generator(cube_root_two());
  const Vec theta = {th, th * th};
  for (auto _ : state) benchmark::DoNotOptimize(simultaneous_approx(theta, state.range(0)));
}
BENCHMARK(BM_SimultaneousApprox)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_EnumerateMin(benchmark::State& state) {
  const CubicObjective f = cubic_objective();
  const HPolyhedron P = cubic_cone();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_min(f, P, state.range(0)));
}
BENCHMARK(BM_EnumerateMin)->Arg(5)->Arg(20)->Arg(50);

static void BM_ReproduceCubic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_cli({"reproduce", "cubic-example"}));
}
BENCHMARK(BM_ReproduceCubic)->Unit(benchmark::kMillisecond);

static void BM_ReproduceQuadratic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_cli({"reproduce", "quadratic-example"}));
}
BENCHMARK(BM_ReproduceQuadratic)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
