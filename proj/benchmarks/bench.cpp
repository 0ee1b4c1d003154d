#include <benchmark/benchmark.h>

#include "wonderful/monomials.hpp"
#include "wonderful/orbits.hpp"
#include "wonderful/paths.hpp"

using namespace wonderful;

namespace {

const WeylGroup& group(char letter, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<WeylGroup>> cache;
  auto& slot = cache[{letter, rank}];
  if (!slot) slot = std::make_unique<WeylGroup>(RootSystem::build(letter, rank));
  return *slot;
}

void BM_WeylGroup(benchmark::State& state, char letter, int rank) {
  for (auto _ : state) {
    WeylGroup g(RootSystem::build(letter, rank));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK_CAPTURE(BM_WeylGroup, A3, 'A', 3);
BENCHMARK_CAPTURE(BM_WeylGroup, B3, 'B', 3);
BENCHMARK_CAPTURE(BM_WeylGroup, F4, 'F', 4)->Unit(benchmark::kMillisecond);

void BM_OrbitPoset(benchmark::State& state, char letter, int rank) {
  const auto& g = group(letter, rank);
  for (auto _ : state) {
    OrbitPoset p(g);
    benchmark::DoNotOptimize(p.size());
  }
}
BENCHMARK_CAPTURE(BM_OrbitPoset, A2, 'A', 2);
BENCHMARK_CAPTURE(BM_OrbitPoset, B2, 'B', 2);
BENCHMARK_CAPTURE(BM_OrbitPoset, G2, 'G', 2)->Unit(benchmark::kMillisecond);

void BM_GeneratePaths(benchmark::State& state, char letter, int rank, std::vector<int> lambda) {
  const auto& g = group(letter, rank);
  const Weight w(lambda);
  for (auto _ : state) benchmark::DoNotOptimize(generate_paths(g.root_system(), w).size());
}
BENCHMARK_CAPTURE(BM_GeneratePaths, A2_22, 'A', 2, std::vector<int>{2, 2});
BENCHMARK_CAPTURE(BM_GeneratePaths, G2_11, 'G', 2, std::vector<int>{1, 1});
BENCHMARK_CAPTURE(BM_GeneratePaths, A3_111, 'A', 3, std::vector<int>{1, 1, 1})->Unit(benchmark::kMillisecond);

void BM_EnumerateMZ(benchmark::State& state, char letter, int rank, std::vector<int> lambda) {
  const auto& g = group(letter, rank);
  const Weight w(lambda);
  const auto top = make_orbit(g, SubsetD::full(rank), g.identity(), g.longest());
  for (auto _ : state) {
    PathCache cache(g);
    benchmark::DoNotOptimize(enumerate_MZ(cache, top, w).size());
  }
}
BENCHMARK_CAPTURE(BM_EnumerateMZ, A1_4, 'A', 1, std::vector<int>{4});
BENCHMARK_CAPTURE(BM_EnumerateMZ, A2_11, 'A', 2, std::vector<int>{1, 1});
BENCHMARK_CAPTURE(BM_EnumerateMZ, B2_11, 'B', 2, std::vector<int>{1, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
