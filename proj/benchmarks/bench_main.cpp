#include <benchmark/benchmark.h>

#include <random>

#include "realcurves/elliptic.hpp"
#include "realcurves/eta.hpp"
#include "realcurves/poly.hpp"

using namespace realcurves;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-20, 20);
  std::vector<BigRational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coef(rng));
  c.emplace_back(1);
  return square_free_part(UniPoly(std::move(c)));
}

void BM_CountRealRoots(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<UniPoly> polys;
  for (int i = 0; i < 64; ++i) polys.push_back(random_poly(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_real_roots(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_CountRealRoots)->DenseRange(2, 10, 2);

void BM_QuarticEta(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const UniPoly q = quartic_from_params({k, BigRational(3), BigRational(7), BigRational(5)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic_eta(q));
  }
}
BENCHMARK(BM_QuarticEta)->Arg(0)->Arg(2)->Arg(4);

void BM_EcMultiple(benchmark::State& state) {
  const WeierstrassCurve e(BigRational(0), BigRational(0), BigRational(17));
  const ECPoint p(BigRational(-2), BigRational(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiple(e, state.range(0), p));
  }
}
BENCHMARK(BM_EcMultiple)->RangeMultiplier(2)->Range(2, 16);

void BM_TorsionOrderBounded(benchmark::State& state) {
  const WeierstrassCurve e(BigRational(0), BigRational(0), BigRational(-2));
  const ECPoint p(BigRational(3), BigRational(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(torsion_order_bounded(e, p, kMazurBound));
  }
}
BENCHMARK(BM_TorsionOrderBounded);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
