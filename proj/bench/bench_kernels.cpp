// Selection (serial and OpenMP) against the brute-force enumeration.

#include <benchmark/benchmark.h>

#include <vector>

#include "gvpfrs/engine.hpp"
#include "gvpfrs/random.hpp"

using namespace gvpfrs;

namespace {

struct Instance {
  FuzzyRelation r;
  FuzzySet a;
};

Instance make(std::size_t n) {
  SampleRng rng(7, n, 0);
  std::vector<double> m(n * n), v(n);
  for (double& x : m) x = rng.uniform();
  for (double& x : v) x = rng.uniform();
  return {FuzzyRelation(n, std::move(m)), FuzzySet(std::move(v))};
}

const Model& model() {
  static const Model m{ResidualPair(product()), ResidualPair(probabilistic_sum()), standard_negation()};
  return m;
}

void run_selection(benchmark::State& state, Execution exec) {
  const Instance inst = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approximate(inst.r, model(), inst.a, 0.5, exec));
  state.SetComplexityN(state.range(0));
}

void BM_selection_serial(benchmark::State& state) { run_selection(state, Execution::serial); }
void BM_selection_parallel(benchmark::State& state) { run_selection(state, Execution::parallel); }

void BM_bruteforce(benchmark::State& state) {
  const Instance inst = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bruteforce_approximate(inst.r, model(), inst.a, 0.5, max_oracle_cap));
}

}  // namespace

BENCHMARK(BM_selection_serial)->RangeMultiplier(2)->Range(8, 1024)->Unit(benchmark::kMicrosecond)->Complexity();
BENCHMARK(BM_selection_parallel)->RangeMultiplier(2)->Range(8, 1024)->Unit(benchmark::kMicrosecond)->Complexity();
BENCHMARK(BM_bruteforce)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
