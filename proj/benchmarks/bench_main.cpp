#include <benchmark/benchmark.h>

#include "qstirling/coinv.hpp"
#include "qstirling/combinat.hpp"
#include "qstirling/conject.hpp"
#include "qstirling/involution.hpp"
#include "qstirling/qseries.hpp"
#include "qstirling/stirling.hpp"
#include "qstirling/symid.hpp"

using namespace qstirling;

// Fresh table each time so the memo does not hide the recursion.
static void BM_StirlingRowSB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    StirlingTable t(Kind::S_B, QMode::polynomial);
    for (int k = 0; k <= n; ++k) benchmark::DoNotOptimize(t.entry(n, k));
  }
}
BENCHMARK(BM_StirlingRowSB)->Arg(10)->Arg(25)->Arg(50);

static void BM_QPolyMultiply(benchmark::State& state) {
  const QPoly a = q_factorial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_QPolyMultiply)->Arg(10)->Arg(20);

static void BM_EnumerateSignedPartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_signed_partitions(n));
}
BENCHMARK(BM_EnumerateSignedPartitions)->DenseRange(4, 6);

static void BM_InvGfSignedPermutations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(statistic_gf(Family::signed_permutation, n, n / 2, Stat::inv));
}
BENCHMARK(BM_InvGfSignedPermutations)->Arg(4)->Arg(5);

static void BM_InvolutionTypeA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_involution(Flavor::typeA, n));
}
BENCHMARK(BM_InvolutionTypeA)->Arg(5)->Arg(6);

static void BM_Hilbert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(n, Type::B));
}
BENCHMARK(BM_Hilbert)->Arg(4)->Arg(6);

static void BM_SymbolicPower(benchmark::State& state) {
  const QEgf f = q_log_one_minus_x(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(f, 3));
}
BENCHMARK(BM_SymbolicPower)->Arg(8)->Arg(12);

static void BM_UnimodalScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(Kind::c_B, n, n, SeqProperty::unimodal));
}
BENCHMARK(BM_UnimodalScan)->Arg(12)->Arg(20);

static void BM_TnGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_tn_expansion(static_cast<int>(state.range(0)), TnVariant::generic));
}
BENCHMARK(BM_TnGrid)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
