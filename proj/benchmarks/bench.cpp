#include <benchmark/benchmark.h>

#include "semimod/catalog.hpp"
#include "semimod/category.hpp"
#include "semimod/projectivity.hpp"
#include "semimod/universe.hpp"

using namespace semimod;

namespace {

const std::vector<Module>& monoids4() {
  static const auto mods = commutative_monoids(4);
  return mods;
}

void BM_HomEnumeration(benchmark::State& state) {
  const auto& mods = monoids4();
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& a : mods)
      for (const auto& b : mods) total += enumerate_hom(a, b).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HomEnumeration)->Unit(benchmark::kMillisecond);

void BM_CongruencesOfFreeB(benchmark::State& state) {
  const auto m = free_module(boolean_semiring(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_congruences(m).size());
}
BENCHMARK(BM_CongruencesOfFreeB)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_CongruencesOfSums(benchmark::State& state) {
  const auto& mods = monoids4();
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < mods.size(); i += 3)
      total += enumerate_congruences(direct_sum(mods[i], mods[mods.size() - 1 - i]).sum).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CongruencesOfSums)->Unit(benchmark::kMillisecond);

void BM_PushoutAndVerify(benchmark::State& state) {
  const auto m = additive_monoid(b31_semiring());
  const auto [l, iota] = as_module(Subsemimodule{m, {0, 2}});
  const Span span{iota, iota};
  const auto targets = monoids4();
  for (auto _ : state) {
    const auto po = pushout(span);
    const auto cocones = cocone_catalog(span, po, targets);
    benchmark::DoNotOptimize(verify_pushout_universal(span, po.legs, cocones).passed);
  }
}
BENCHMARK(BM_PushoutAndVerify)->Unit(benchmark::kMillisecond);

void BM_ProjectivityE(benchmark::State& state) {
  const auto& mods = monoids4();
  for (auto _ : state) {
    std::size_t yes = 0;
    for (std::size_t i = 0; i < mods.size(); i += 2)
      yes += is_relatively_projective(mods[i], mods[mods.size() - 1 - i], Flavor::e) ? 1 : 0;
    benchmark::DoNotOptimize(yes);
  }
}
BENCHMARK(BM_ProjectivityE)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
