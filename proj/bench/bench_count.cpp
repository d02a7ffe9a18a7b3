// Serial reference kernel against the OpenMP kernel on table-sized counts.

#include <benchmark/benchmark.h>

#include "altperm/enumerate.hpp"
#include "altperm/kernel.hpp"

namespace {

using altperm::PatternMatcher;
using altperm::PermClass;
using altperm::Permutation;
using altperm::SearchSpec;

SearchSpec alternating_spec(const PatternMatcher& m, int n) {
  return SearchSpec::for_class(PermClass::alternating(), n, &m);
}

void BM_AlternatingSerial(benchmark::State& state) {
  const PatternMatcher m(Permutation::parse("634521"));
  const auto spec = alternating_spec(m, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(altperm::count_serial(spec));
}

void BM_AlternatingParallel(benchmark::State& state) {
  const PatternMatcher m(Permutation::parse("634521"));
  const auto spec = alternating_spec(m, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(altperm::count_parallel(spec));
}

void BM_DescentTypeSerial(benchmark::State& state) {
  const PatternMatcher m(Permutation::parse("3124"));
  const auto spec = SearchSpec::for_class(
      PermClass::descent_type(3), static_cast<int>(state.range(0)), &m);
  for (auto _ : state) benchmark::DoNotOptimize(altperm::count_serial(spec));
}

void BM_DescentTypeParallel(benchmark::State& state) {
  const PatternMatcher m(Permutation::parse("3124"));
  const auto spec = SearchSpec::for_class(
      PermClass::descent_type(3), static_cast<int>(state.range(0)), &m);
  for (auto _ : state) benchmark::DoNotOptimize(altperm::count_parallel(spec));
}

}  // namespace

BENCHMARK(BM_AlternatingSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlternatingParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DescentTypeSerial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DescentTypeParallel)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
