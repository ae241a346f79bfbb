// Serial vs OpenMP timings for the hot kernels. Arg(0) is serial, Arg(1) parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "sadic/kernels.hpp"
#include "sadic/language.hpp"
#include "sadic/morphism.hpp"

using namespace sadic;

namespace {

kernels::Exec mode(const benchmark::State& st) {
  return st.range(0) ? kernels::Exec::Parallel : kernels::Exec::Serial;
}

// prefix of the fixed point of 0 -> 011, 1 -> 001
Word limit_word(std::size_t n) {
  Alphabet a({"0", "1"});
  Morphism th = Morphism::from_strings(a, a, {"0 1 1", "0 0 1"});
  Word w{0};
  while (w.size() < n) w = th.apply(w);
  w.resize(n);
  return w;
}

void BM_ReturnGcd(benchmark::State& st) {
  Word u = limit_word(1 << 20);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::return_gcd(u, mode(st)));
}
BENCHMARK(BM_ReturnGcd)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SmallestPeriod(benchmark::State& st) {
  Word u = limit_word(1 << 18);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::smallest_period(u, 4096, mode(st)));
}
BENCHMARK(BM_SmallestPeriod)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ComposeAll(benchmark::State& st) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Letter> d(0, 7);
  std::vector<Word> outer(512, Word(8)), inner(243, Word(8));
  for (auto& w : outer)
    for (auto& x : w) x = d(rng);
  for (auto& w : inner)
    for (auto& x : w) x = d(rng);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::compose_all(outer, inner, mode(st)));
}
BENCHMARK(BM_ComposeAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Occurrences(benchmark::State& st) {
  Word u = limit_word(1 << 20);
  Word pat(u.begin() + 1000, u.begin() + 1012);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::occurrences(u, pat, mode(st)));
}
BENCHMARK(BM_Occurrences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DistinctFactors(benchmark::State& st) {
  Word u = limit_word(1 << 18);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::distinct_factors(u, 10, mode(st)));
}
BENCHMARK(BM_DistinctFactors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
