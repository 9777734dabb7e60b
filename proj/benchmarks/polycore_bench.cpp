#include <benchmark/benchmark.h>

#include "tuttekit/bipoly.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/sampling.hpp"

namespace {

using namespace tuttekit;

BiPoly dense_operand(unsigned degree, unsigned seed) {
  sampling::Rng rng(seed);
  std::vector<BiPoly::Term> terms;
  for (std::uint32_t i = 0; i <= degree; ++i) {
    for (std::uint32_t j = 0; j <= degree; ++j) {
      terms.push_back({i, j, BigInt(static_cast<long>(rng.between(-1000, 1000)))});
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

void BM_BiPolyMultiply(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  const BiPoly a = dense_operand(degree, 1);
  const BiPoly b = dense_operand(degree, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BiPolyMultiply)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_BiPolySquare(benchmark::State& state) {
  const BiPoly a = dense_operand(static_cast<unsigned>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(square(a));
}
BENCHMARK(BM_BiPolySquare)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_TrianglePowerExpand(benchmark::State& state) {
  const PowerForm pf{triangle_tutte(), BigInt(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(powerform_expand(pf));
}
BENCHMARK(BM_TrianglePowerExpand)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMicrosecond);

void BM_BiPolyEvaluate(benchmark::State& state) {
  const BiPoly a = dense_operand(static_cast<unsigned>(state.range(0)), 4);
  const Rational x0 = make_rational(2, 3);
  const Rational y0 = make_rational(-7, 5);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(a, x0, y0));
}
BENCHMARK(BM_BiPolyEvaluate)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

}  // namespace
