#include <random>

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "hexmetric/hexagon.hpp"
#include "hexmetric/polytope.hpp"
#include "hexmetric/realize.hpp"
#include "hexmetric/solver.hpp"

using namespace hexmetric;
using namespace hexmetric::testing;

namespace {

const HexComplex& four_hex() {
  static const HexComplex cx = HexComplex::build(four_hex_spec());
  return cx;
}

ECoordinate four_hex_z() { return ECoordinate{{1.0, 0.7, 1.2, 0.4, 2.0, 1.0}}; }

void BM_Theta(benchmark::State& state) {
  const TTriple t{0.3, -0.1, 1.2};
  for (auto _ : state) benchmark::DoNotOptimize(theta(t));
}
BENCHMARK(BM_Theta);

void BM_ThetaGradient(benchmark::State& state) {
  const TTriple t{0.3, -0.1, 1.2};
  for (auto _ : state) benchmark::DoNotOptimize(theta_grad(t));
}
BENCHMARK(BM_ThetaGradient);

void BM_ThetaHessian(benchmark::State& state) {
  const TTriple t{0.3, -0.1, 1.2};
  for (auto _ : state) benchmark::DoNotOptimize(theta_hessian(t));
}
BENCHMARK(BM_ThetaHessian);

void BM_Feasibility(benchmark::State& state) {
  const ECoordinate z = four_hex_z();
  for (auto _ : state) benchmark::DoNotOptimize(check_feasibility(four_hex(), z));
}
BENCHMARK(BM_Feasibility);

void BM_EnumerateCycles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(four_hex().enumerate_fundamental_cycles(10000));
}
BENCHMARK(BM_EnumerateCycles);

void BM_Maximize(benchmark::State& state) {
  const ECoordinate z = four_hex_z();
  for (auto _ : state) benchmark::DoNotOptimize(maximize(four_hex(), z));
}
BENCHMARK(BM_Maximize);

void BM_ForwardMap(benchmark::State& state) {
  const std::vector<double> lengths{1.0, 0.8, 1.5, 0.6, 2.0, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(forward_map(four_hex(), lengths));
}
BENCHMARK(BM_ForwardMap);

void BM_VerifyMetric(benchmark::State& state) {
  const HyperbolicMetric m = extract_metric(four_hex(), maximize(four_hex(), four_hex_z()).t);
  for (auto _ : state) benchmark::DoNotOptimize(verify_metric(four_hex(), m, 1e-8));
}
BENCHMARK(BM_VerifyMetric);

}  // namespace

BENCHMARK_MAIN();
