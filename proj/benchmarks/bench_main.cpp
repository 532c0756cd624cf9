#include <benchmark/benchmark.h>

#include "dualbent/codebook.hpp"
#include "dualbent/hybrid.hpp"

using namespace dualbent;

namespace {

BentContext ext(std::uint32_t p, std::uint32_t n, std::uint32_t m, Code e) {
  FamilyParams P;
  P.e = e;
  return BentContext::prepare(make_bent(Family::ext_square, p, {n}, m, 0, P));
}

void BM_FieldMul(benchmark::State& state) {
  const auto f = get_field(3, static_cast<std::uint32_t>(state.range(0)));
  Code x = f->primitive(), y = 1;
  for (auto _ : state) {
    y = f->mul(y, x);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(8)->Arg(12);

void BM_WalshSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto ctx = ext(3, n, 1, 1);
  const auto f = component_table(*ctx.spec.codomain, ctx.tables.values, 1);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_spectrum(*ctx.spec.space, f));
}
BENCHMARK(BM_WalshSpectrum)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TranslateSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto m = static_cast<std::uint32_t>(state.range(1));
  const auto ctx = ext(3, n, m, get_field(3, n)->primitive());
  const auto C = build_cd(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(C, SpectrumMode::translate));
}
BENCHMARK(BM_TranslateSpectrum)->Args({4, 2})->Args({6, 3})->Args({8, 2})->Unit(benchmark::kMillisecond);

void BM_PairwiseSpectrum(benchmark::State& state) {
  const auto ctx = ext(3, 4, 2, get_field(3, 4)->primitive());
  const auto C = build_partial_hadamard(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(C, SpectrumMode::pairwise));
}
BENCHMARK(BM_PairwiseSpectrum)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
