#include "skein/basis.hpp"
#include "skein/verify.hpp"

#include <benchmark/benchmark.h>

using namespace skein;

namespace {

// Fresh engine per iteration so memoized products do not hide the cost.
void BM_ThetaProduct(benchmark::State& state) {
  const BPoint p1{state.range(0), 1};
  const BPoint p2{-1, state.range(0)};
  for (auto _ : state) {
    const ThetaAlgebra alg(DiagramConfig::s04());
    benchmark::DoNotOptimize(alg.product(p1, p2));
  }
  state.SetLabel("F total " + std::to_string(f_norm(p1) + f_norm(p2)));
}
BENCHMARK(BM_ThetaProduct)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ThetaProductS11(benchmark::State& state) {
  const BPoint p1{state.range(0), 1};
  const BPoint p2{-1, state.range(0)};
  for (auto _ : state) {
    const ThetaAlgebra alg(DiagramConfig::s11());
    benchmark::DoNotOptimize(alg.product(p1, p2));
  }
}
BENCHMARK(BM_ThetaProductS11)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Consistency(benchmark::State& state) {
  for (auto _ : state) {
    const ThetaAlgebra alg(DiagramConfig::s04());
    benchmark::DoNotOptimize(verify_consistency(alg, state.range(0)));
  }
}
BENCHMARK(BM_Consistency)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_NcProduct(benchmark::State& state) {
  const Ring r = Ring::S04;
  const auto x = NormalElement::monomial(r, normal_monomial({state.range(0), 1}));
  const auto y = NormalElement::monomial(r, normal_monomial({-1, state.range(0)}));
  for (auto _ : state) {
    const NcAlgebra nc(Presentation::s04());
    benchmark::DoNotOptimize(nc.product(x, y));
  }
}
BENCHMARK(BM_NcProduct)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_WallSeries(benchmark::State& state) {
  const auto cfg = DiagramConfig::s04();
  for (auto _ : state) benchmark::DoNotOptimize(ray_series(cfg, {1, 1}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_WallSeries)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_ThetaToMonomials(benchmark::State& state) {
  for (auto _ : state) {
    const ThetaAlgebra alg(DiagramConfig::s04());
    const MonomialBasis basis(alg);
    benchmark::DoNotOptimize(basis.theta_to_monomials(BPoint{state.range(0), 1}));
  }
}
BENCHMARK(BM_ThetaToMonomials)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
