#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "catsieve/catalog.hpp"
#include "catsieve/cech.hpp"
#include "catsieve/homology.hpp"
#include "catsieve/smith.hpp"
#include "catsieve/topology.hpp"

using namespace catsieve;

static IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<std::int64_t> entries(n * n);
  for (auto& e : entries) e = entry(rng);
  return IntMatrix(n, n, entries);
}

static void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_SphereHomology(benchmark::State& state) {
  auto x = boundary_simplex(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(x));
}
BENCHMARK(BM_SphereHomology)->Arg(3)->Arg(4)->Arg(5);

static void BM_CanonicalTopology(benchmark::State& state) {
  auto catalog = standard_catalog();
  for (auto _ : state)
    for (const auto& entry : catalog) benchmark::DoNotOptimize(canonical_topology(entry.second));
}
BENCHMARK(BM_CanonicalTopology);

static void BM_TetrahedronCover(benchmark::State& state) {
  auto x = std::make_shared<const SSet>(boundary_simplex(3, static_cast<std::size_t>(state.range(0))));
  std::vector<SubSSet> parts;
  for (const char* face : {"123", "023", "013", "012"}) parts.push_back(generated_subobject(x, {face}));
  for (auto _ : state) benchmark::DoNotOptimize(cech_cover(x, parts));
}
BENCHMARK(BM_TetrahedronCover)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
