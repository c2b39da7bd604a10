#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "evpos/classify.hpp"
#include "evpos/covering.hpp"
#include "evpos/expr_parser.hpp"
#include "evpos/partitions.hpp"
#include "evpos/polynomial.hpp"
#include "evpos/powers.hpp"
#include "evpos/saddle.hpp"
#include "evpos/strongpos.hpp"

using namespace evpos;

namespace {

const char* kDegreeTen = "1 + z^3 + z^4 - 1/100z^5 + z^6 + z^7 + z^10";

std::vector<Integer> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Integer> out(n);
  for (auto& x : out) {
    x = Integer(static_cast<long>(rng() % 2001) - 1000);
    x <<= static_cast<mp_bitcnt_t>(rng() % 256);
  }
  return out;
}

}  // namespace

static void BM_ConvolveSchoolbook(benchmark::State& state) {
  const auto a = random_vector(state.range(0), 1);
  const auto b = random_vector(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dense::convolve_schoolbook(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvolveSchoolbook)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_Convolve(benchmark::State& state) {
  const auto a = random_vector(state.range(0), 1);
  const auto b = random_vector(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dense::convolve(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Convolve)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_PowerDegreeTen(benchmark::State& state) {
  const auto f = parse_polynomial(kDegreeTen);
  for (auto _ : state) benchmark::DoNotOptimize(pow(f, state.range(0)));
}
BENCHMARK(BM_PowerDegreeTen)->Arg(10)->Arg(60)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_ProfileDegreeTen(benchmark::State& state) {
  const auto f = parse_polynomial(kDegreeTen);
  for (auto _ : state) benchmark::DoNotOptimize(profile(f, state.range(0)));
}
BENCHMARK(BM_ProfileDegreeTen)->Arg(60)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_RangeCheckTop(benchmark::State& state) {
  const auto f = parse_polynomial("1 + z^2 + z^3 - 1/10z^4 + z^5 + z^6");
  const std::uint64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(range_check(f, m, 6 * m - 17, 6 * m));
}
BENCHMARK(BM_RangeCheckTop)->Arg(50)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_CoveringReport(benchmark::State& state) {
  const auto f = parse_polynomial("1 + z^7 + z^11 - z^40 + z^45 + z^53");
  for (auto _ : state) benchmark::DoNotOptimize(covering_report(f));
}
BENCHMARK(BM_CoveringReport);

static void BM_CertifyDegreeTen(benchmark::State& state) {
  const auto f = parse_polynomial(kDegreeTen);
  CertifyOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(certify(f, options));
}
BENCHMARK(BM_CertifyDegreeTen)->Unit(benchmark::kMillisecond);

static void BM_RefuteRandom(benchmark::State& state) {
  const auto f = parse_polynomial("1 - z + 1/2z^2 + z^3");
  for (auto _ : state) benchmark::DoNotOptimize(refute(f));
}
BENCHMARK(BM_RefuteRandom)->Unit(benchmark::kMillisecond);

static void BM_ClassifyDegreeTen(benchmark::State& state) {
  const auto f = parse_polynomial(kDegreeTen);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifyDegreeTen)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePartitions(benchmark::State& state) {
  for (auto _ : state) {
    PartitionEnumerator e(state.range(0), 6);
    std::size_t count = 0;
    while (e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(10)->Arg(30)->Arg(60);

static void BM_SaddleEstimate(benchmark::State& state) {
  const auto f = parse_polynomial("1 + 2z + 3z^2");
  SaddleOptions options;
  options.exact_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_coefficient(f, 500, 12000, options));
}
BENCHMARK(BM_SaddleEstimate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
