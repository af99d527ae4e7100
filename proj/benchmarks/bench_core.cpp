#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "varspace/exponent.hpp"
#include "varspace/grid.hpp"
#include "varspace/lebesgue.hpp"
#include "varspace/operators.hpp"
#include "varspace/spaces.hpp"
#include "varspace/systems.hpp"
#include "varspace/weights.hpp"

namespace {

using namespace varspace;

GridFunction random_function(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GridFunction f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = {u(rng), u(rng)};
  return f;
}

VariableExponent wavy(const Grid& g, double lo, double hi) {
  return VariableExponent::from_function(
      g, [=](const Point& x) { return lo + (hi - lo) * 0.5 * (1.0 + std::sin(2.0 * kPi * x[0])); });
}

Grid grid_for(const benchmark::State& state) {
  return Grid(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
}

void BM_LuxemburgNorm(benchmark::State& state) {
  const Grid g = grid_for(state);
  const GridFunction f = random_function(g, 1);
  const VariableExponent p = wavy(g, 1.2, 3.5);
  for (auto _ : state) benchmark::DoNotOptimize(norm(f, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_LuxemburgNorm)->Args({1, 256})->Args({1, 4096})->Args({2, 64});

void BM_QuasiNorm(benchmark::State& state) {
  const Grid g = grid_for(state);
  const int J = static_cast<int>(std::log2(static_cast<double>(g.n()))) - 1;
  const SpaceSpec spec{state.range(2) == 0 ? Scale::B : Scale::F, wavy(g, 1.5, 2.5), wavy(g, 1.5, 3.0),
                       make_variable_smoothness(g, std::vector<double>(g.size(), 0.5), J),
                       build_admissible_pair("partition", g, J), J};
  const GridFunction f = random_function(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(quasi_norm(f, spec));
}
BENCHMARK(BM_QuasiNorm)->Args({1, 256, 0})->Args({1, 256, 1})->Args({2, 64, 0})->Args({2, 64, 1});

void BM_PeetreMaximal(benchmark::State& state) {
  const Grid g = grid_for(state);
  const int J = static_cast<int>(std::log2(static_cast<double>(g.n()))) - 1;
  const FunctionSequence F = littlewood_paley(random_function(g, 3), build_admissible_pair("partition", g, J));
  for (auto _ : state) benchmark::DoNotOptimize(peetre_maximal(F, 2.0));
}
BENCHMARK(BM_PeetreMaximal)->Args({1, 256})->Args({1, 1024})->Args({2, 32});

}  // namespace

BENCHMARK_MAIN();
