#include <benchmark/benchmark.h>

#include <nlohmann/json.hpp>

#include "genrep/census.hpp"
#include "genrep/qcalc.hpp"

using namespace genrep;
using nlohmann::json;

namespace {

RingPtr zn(int n) { return build_ring(json{{"kind", "zn"}, {"n", n}}); }

void BM_SubmoduleLattice(benchmark::State& state) {
  auto m = free_module(zn(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) {
    SubmoduleLattice lat(m);
    benchmark::DoNotOptimize(lat.node_count());
  }
}
BENCHMARK(BM_SubmoduleLattice)->Arg(4)->Arg(6)->Arg(9);

void BM_SurjectionBruteforce(benchmark::State& state) {
  auto r = zn(4);
  auto big = free_module(r, static_cast<int>(state.range(0)));
  auto target = free_module(r, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(surjection_count_bruteforce(*big, *target));
}
BENCHMARK(BM_SurjectionBruteforce)->Arg(2)->Arg(3);

void BM_CharacterTableGL3F2(benchmark::State& state) {
  auto m = free_module(zn(2), 3);
  auto g = PermGroup::closure(m->size(), aut_group(*m));
  for (auto _ : state) {
    auto t = CharacterTable::compute(g);
    benchmark::DoNotOptimize(t->degrees());
  }
}
BENCHMARK(BM_CharacterTableGL3F2);

void BM_AutGroup(benchmark::State& state) {
  auto m = free_module(zn(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aut_group(*m).size());
}
BENCHMARK(BM_AutGroup)->Arg(2)->Arg(3);

void BM_SimpleCensus(benchmark::State& state) {
  for (auto _ : state) {
    Session s(zn(4));
    benchmark::DoNotOptimize(simple_census(s, 2, 3).rows.size());
  }
}
BENCHMARK(BM_SimpleCensus);

void BM_SCount(benchmark::State& state) {
  Session s(zn(static_cast<int>(state.range(0))));
  auto m = free_module(s.ring(), 2);
  s.lattice(m);  // warm the lattice cache
  for (auto _ : state) benchmark::DoNotOptimize(s_count(s, m).terms().size());
}
BENCHMARK(BM_SCount)->Arg(4)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
