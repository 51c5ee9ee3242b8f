#include <benchmark/benchmark.h>

#include "okit/koszulver.hpp"
#include "okit/linres.hpp"
#include "okit/stratblock.hpp"

using namespace okit;

namespace {

GroupPtr cached_group(const char* name) {
  static std::map<std::string, GroupPtr> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, Group::build(CoxeterDiagram::parse(name))).first;
  return it->second;
}

void BM_BuildGroup(benchmark::State& state, const char* name) {
  CoxeterDiagram d = CoxeterDiagram::parse(name);
  for (auto _ : state) benchmark::DoNotOptimize(Group::build(d));
}
BENCHMARK_CAPTURE(BM_BuildGroup, A4, "A4");
BENCHMARK_CAPTURE(BM_BuildGroup, B4, "B4");
BENCHMARK_CAPTURE(BM_BuildGroup, D4, "D4");

void BM_BruhatLeq(benchmark::State& state) {
  auto g = cached_group("B4");
  std::uint32_t n = g->size();
  std::uint32_t x = 0;
  for (auto _ : state) {
    x = (x * 2654435761u + 1) % n;
    std::uint32_t y = (x * 40503u + 7) % n;
    benchmark::DoNotOptimize(g->bruhat_leq(x, y));
  }
}
BENCHMARK(BM_BruhatLeq);

void BM_KLTable(benchmark::State& state, const char* name) {
  auto g = cached_group(name);
  for (auto _ : state) {
    KLTable t(g);
    t.build_all();
    benchmark::DoNotOptimize(t.complete());
  }
}
BENCHMARK_CAPTURE(BM_KLTable, A3, "A3");
BENCHMARK_CAPTURE(BM_KLTable, B3, "B3");

void BM_CartanMatrix(benchmark::State& state) {
  KLTable t(cached_group("B3"));
  t.build_all();
  for (auto _ : state) benchmark::DoNotOptimize(cartan_matrix(t));
}
BENCHMARK(BM_CartanMatrix);

void BM_KoszulSelfCheck(benchmark::State& state, const char* name) {
  auto t = std::make_shared<KLTable>(cached_group(name));
  t->build_all();
  for (auto _ : state) benchmark::DoNotOptimize(verify_t21(t).pass);
}
BENCHMARK_CAPTURE(BM_KoszulSelfCheck, A3, "A3");
BENCHMARK_CAPTURE(BM_KoszulSelfCheck, B3, "B3");

void BM_TiltingCoresolutions(benchmark::State& state) {
  auto t = std::make_shared<KLTable>(cached_group("A3"));
  BlockData b = build_block(t, BlockSpec{t->group().diagram(), {}, {}, Flavor::Regular});
  for (auto _ : state)
    for (std::uint32_t x = 0; x < t->group().size(); ++x)
      benchmark::DoNotOptimize(linear_tilting_coresolution(b, x));
}
BENCHMARK(BM_TiltingCoresolutions);

}  // namespace

BENCHMARK_MAIN();
