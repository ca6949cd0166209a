// Serial reference kernels against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to the number of cores to compare.

#include <benchmark/benchmark.h>

#include "rankclass/classnum.hpp"
#include "rankclass/identities.hpp"
#include "rankclass/overpartitions.hpp"
#include "rankclass/qseries.hpp"

namespace {

using namespace rankclass;

QSeries dense_operand(std::size_t order) {
  return invert(substitute_neg_q(theta_series(order)));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const QSeries a = dense_operand(order);
  const QSeries b = lambert_sum(LambertKind::OverpartitionRank, order);
  for (auto _ : state) benchmark::DoNotOptimize(serial::multiply(a, b));
}
BENCHMARK(BM_MultiplySerial)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_MultiplyParallel(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const QSeries a = dense_operand(order);
  const QSeries b = lambert_sum(LambertKind::OverpartitionRank, order);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_MultiplyParallel)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_TallySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::tally_ranks(state.range(0)));
}
BENCHMARK(BM_TallySerial)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_TallyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tally_ranks(state.range(0)));
}
BENCHMARK(BM_TallyParallel)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_HurwitzTableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::hurwitz_bruteforce_table(state.range(0)));
}
BENCHMARK(BM_HurwitzTableSerial)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_HurwitzTableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_bruteforce_table(state.range(0)));
}
BENCHMARK(BM_HurwitzTableParallel)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_R3TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::r3_bruteforce_table(state.range(0)));
}
BENCHMARK(BM_R3TableSerial)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_R3TableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(r3_bruteforce_table(state.range(0)));
}
BENCHMARK(BM_R3TableParallel)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_C4TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::c4_enum_table(state.range(0)));
}
BENCHMARK(BM_C4TableSerial)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_C4TableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c4_enum_table(state.range(0)));
}
BENCHMARK(BM_C4TableParallel)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
