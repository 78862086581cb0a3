// Serial reference kernels against their OpenMP counterparts on the
// workloads the library actually runs.

#include "prism/kernels.hpp"
#include "prism/lattice.hpp"
#include "prism/priestley.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace prism;

const std::vector<Lattice>& torus_keys() {
  static const auto keys = bounded_lattices(3, 3);
  return keys;
}

template <bool Parallel>
void cotoral_order(benchmark::State& state) {
  const auto& keys = torus_keys();
  auto pred = [&](std::size_t a, std::size_t b) { return a == b || is_saturated_in(keys[b], keys[a]); };
  for (auto _ : state) {
    Relation r = Parallel ? kernels::omp::build_relation(keys.size(), pred) : kernels::serial::build_relation(keys.size(), pred);
    benchmark::DoNotOptimize(r.rows.data());
  }
  state.counters["points"] = static_cast<double>(keys.size());
}

Relation random_dag(std::size_t n) {
  std::mt19937 rng(7);
  std::bernoulli_distribution edge(4.0 / static_cast<double>(n));
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) r.set(i, j);
  }
  return r;
}

template <bool Parallel>
void closure(benchmark::State& state) {
  const auto base = random_dag(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Relation r = base;
    if (Parallel)
      kernels::omp::transitive_closure(r);
    else
      kernels::serial::transitive_closure(r);
    benchmark::DoNotOptimize(r.rows.data());
  }
}

template <bool Parallel>
void down_set_filter(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto rel = random_dag(n);
  std::vector<std::uint64_t> below(n, 0);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (rel(y, x)) below[x] |= std::uint64_t{1} << y;
  auto pred = [&](std::uint64_t m) {
    for (unsigned x = 0; x < n; ++x)
      if (((m >> x) & 1) && (below[x] & ~m)) return false;
    return true;
  };
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::filter_subsets(n, pred) : kernels::serial::filter_subsets(n, pred);
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK(cotoral_order<false>)->Name("cotoral_order/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(cotoral_order<true>)->Name("cotoral_order/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(closure<false>)->Name("transitive_closure/serial")->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(closure<true>)->Name("transitive_closure/omp")->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(down_set_filter<false>)->Name("down_set_filter/serial")->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(down_set_filter<true>)->Name("down_set_filter/omp")->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
