#include <benchmark/benchmark.h>

#include <random>

#include "lenslab/check.hpp"
#include "lenslab/gallery.hpp"
#include "lenslab/rules.hpp"
#include "lenslab/search.hpp"

using namespace lenslab;

namespace {

FiniteLens random_lens(std::mt19937_64& rng, int n, int m) {
  FiniteLens lens;
  lens.s_size = n;
  lens.v_size = m;
  lens.get.emplace(static_cast<std::size_t>(n));
  lens.put.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int& x : *lens.get) x = static_cast<int>(rng() % static_cast<unsigned>(m));
  for (int& x : lens.put) x = static_cast<int>(rng() % static_cast<unsigned>(n));
  return lens;
}

void BM_Profile(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<FiniteLens> lenses;
  for (int i = 0; i < 64; ++i) lenses.push_back(random_lens(rng, n, n));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(law_profile(lenses[i++ % lenses.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Profile)->Arg(2)->Arg(3)->Arg(4);

void BM_CheckSingleLaw(benchmark::State& state) {
  Law law = static_cast<Law>(state.range(0));
  std::mt19937_64 rng(11);
  FiniteLens lens = random_lens(rng, 4, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_law(lens, law));
  }
}
BENCHMARK(BM_CheckSingleLaw)
    ->Arg(static_cast<int>(Law::SG))
    ->Arg(static_cast<int>(Law::PP))
    ->Arg(static_cast<int>(Law::VD));

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    LensEnumerator it(2, 2);
    std::uint64_t count = 0;
    while (auto lens = it.next()) {
      benchmark::DoNotOptimize(lens->put.data());
      ++count;
    }
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_Enumerate);

void BM_ClosureAllSubsets(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint32_t bits = 0; bits < (1u << kLawCount); ++bits) {
      benchmark::DoNotOptimize(
          closure(LawSet::from_bits(static_cast<std::uint16_t>(bits))).closed);
    }
  }
  state.SetItemsProcessed(state.iterations() * (1u << kLawCount));
}
BENCHMARK(BM_ClosureAllSubsets);

void BM_Sweep(benchmark::State& state) {
  SearchConfig config;
  config.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(soundness_sweep(2, 3, config).total_lenses);
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4);

void BM_GalleryCheck(benchmark::State& state) {
  int window = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gallery_check("pi_pow", window).conforms());
  }
}
BENCHMARK(BM_GalleryCheck)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
