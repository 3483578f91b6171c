#include <benchmark/benchmark.h>

#include "loopkit/certificates.hpp"
#include "loopkit/constructions.hpp"
#include "loopkit/normal.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/subloops.hpp"

using namespace loopkit;

namespace {

const CayleyTable& m2() {
  static CayleyTable L = paige_loop(2);
  return L;
}

const CayleyTable& m3() {
  static CayleyTable L = paige_loop(3);
  return L;
}

}  // namespace

static void BM_paige_build(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CayleyTable L = paige_loop(q);
    benchmark::DoNotOptimize(L.order());
  }
}
BENCHMARK(BM_paige_build)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_closure_pair(benchmark::State& state) {
  const CayleyTable& L = m2();
  Elem a = 1;
  for (auto _ : state) {
    SubsetMask gens;
    gens.set(0);
    gens.set(a);
    gens.set((a * 7 + 3) % 120);
    benchmark::DoNotOptimize(closure(L, gens));
    a = Elem(a % 119 + 1);
  }
}
BENCHMARK(BM_closure_pair);

static void BM_moufang_check(benchmark::State& state) {
  const CayleyTable& L = state.range(0) == 2 ? m2() : m3();
  for (auto _ : state) benchmark::DoNotOptimize(is_moufang(L, 1));
}
BENCHMARK(BM_moufang_check)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_simple_check(benchmark::State& state) {
  const CayleyTable& L = m2();
  for (auto _ : state) benchmark::DoNotOptimize(is_simple(L, 1));
}
BENCHMARK(BM_simple_check)->Unit(benchmark::kMillisecond);

static void BM_subloop_enumeration(benchmark::State& state) {
  const CayleyTable& L = m2();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subloops(L).size());
}
BENCHMARK(BM_subloop_enumeration)->Unit(benchmark::kMillisecond);

static void BM_census_order5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_loops(5).size());
}
BENCHMARK(BM_census_order5)->Unit(benchmark::kMillisecond);

static void BM_decide_weak_z24(benchmark::State& state) {
  CayleyTable L = cyclic_group(24);
  for (auto _ : state) benchmark::DoNotOptimize(decide_weak(L).holds);
}
BENCHMARK(BM_decide_weak_z24);

BENCHMARK_MAIN();
