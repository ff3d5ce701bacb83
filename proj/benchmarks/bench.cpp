#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <string>

#include "bezsolve/bezmat.hpp"
#include "bezsolve/io.hpp"
#include "bezsolve/parser.hpp"
#include "bezsolve/rank.hpp"
#include "bezsolve/reduce.hpp"
#include "bezsolve/solve.hpp"

using namespace bezsolve;

namespace {

PolySystem bivariate() {
  return PolySystem::make(
      {parse_poly("x1^2 + x1*x2^2 - 1", 2), parse_poly("x1^2*x2 + x1", 2)});
}

const PolySystem& stress() {
  static const PolySystem f = load_system(std::string(FIXTURES_DIR) + "/stress4.json");
  return f;
}

const Eigen::MatrixXcd& stress_b1() {
  static const Eigen::MatrixXcd b1 = [] {
    const FourierGrid grid = fourier_points(stress().multidegree);
    return interpolate(evaluation_matrix(stress(), 0, grid), grid);
  }();
  return b1;
}

}  // namespace

static void BM_BuildFamilySmall(benchmark::State& state) {
  const PolySystem f = bivariate();
  for (auto _ : state) benchmark::DoNotOptimize(build_family(f));
}
BENCHMARK(BM_BuildFamilySmall);

static void BM_SymbolicFamilySmall(benchmark::State& state) {
  const PolySystem f = bivariate();
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_family(f));
}
BENCHMARK(BM_SymbolicFamilySmall);

static void BM_InterpolateStress(benchmark::State& state) {
  const FourierGrid grid = fourier_points(stress().multidegree);
  const EvalMatrix C = evaluation_matrix(stress(), 0, grid);
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(C, grid));
}
BENCHMARK(BM_InterpolateStress)->Unit(benchmark::kMillisecond);

static void BM_RankGlobalStress(benchmark::State& state) {
  const Eigen::MatrixXcd& b1 = stress_b1();
  for (auto _ : state) benchmark::DoNotOptimize(numerical_rank(b1));
}
BENCHMARK(BM_RankGlobalStress)->Unit(benchmark::kMillisecond);

static void BM_RankBlockedStress(benchmark::State& state) {
  const Eigen::MatrixXcd& b1 = stress_b1();
  for (auto _ : state) benchmark::DoNotOptimize(numerical_rank_blocked(b1));
}
BENCHMARK(BM_RankBlockedStress)->Unit(benchmark::kMillisecond);

static void BM_BlockTriangularizeStress(benchmark::State& state) {
  const Eigen::MatrixXcd& b1 = stress_b1();
  for (auto _ : state) benchmark::DoNotOptimize(block_triangularize(b1));
}
BENCHMARK(BM_BlockTriangularizeStress)->Unit(benchmark::kMillisecond);

static void BM_ReduceSmall(benchmark::State& state) {
  const BezoutFamily fam = build_family(bivariate());
  for (auto _ : state) benchmark::DoNotOptimize(reduce_family(fam));
}
BENCHMARK(BM_ReduceSmall);

static void BM_SolveSmall(benchmark::State& state) {
  const PolySystem f = bivariate();
  for (auto _ : state) {
    RootSet rs = joint_eigen(companions(reduce_family(build_family(f))));
    verify(rs, f);
    benchmark::DoNotOptimize(rs);
  }
}
BENCHMARK(BM_SolveSmall);

BENCHMARK_MAIN();
