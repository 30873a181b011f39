#include <benchmark/benchmark.h>

#include <random>

#include "semreg/constant_fit.hpp"
#include "semreg/dataset_io.hpp"
#include "semreg/engine.hpp"
#include "semreg/node_equation.hpp"
#include "test_support.hpp"

using namespace semreg;

namespace {

const Dataset& housing() {
  static const Dataset data = [] {
    CsvOptions opts;
    opts.header = true;
    return load_dataset(SEMREG_DATA_DIR "/housing.csv", opts);
  }();
  return data;
}

// A mid-sized tree grown on housing, as the engine would see it.
const EvaluatedTree& grown_tree() {
  static const EvaluatedTree tree = [] {
    Hyperparameters hp;
    hp.strategy = 3;
    hp.max_nodes = 41;
    hp.max_iterations = 20;
    return EvaluatedTree(fit(housing(), hp).tree, housing());
  }();
  return tree;
}

void BM_ConstantScan(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<NodeEquation> eqs;
  for (int i = 0; i < 16; ++i) {
    NodeEquation eq;
    for (int j = 0; j < state.range(0); ++j) {
      eq.a.push_back(testing::uniform(rng, -3, 3));
      eq.b.push_back(testing::uniform(rng, -3, 3));
      eq.c.push_back(testing::uniform(rng, -3, 3));
      eq.d.push_back(testing::uniform(rng, -3, 3));
    }
    eqs.push_back(std::move(eq));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_constant(eqs[i++ % eqs.size()]));
  }
}
BENCHMARK(BM_ConstantScan)->Arg(20)->Arg(455);

void BM_PropagateEquations(benchmark::State& state) {
  const EvaluatedTree& tree = grown_tree();
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_equations(tree, housing().targets()));
  }
  state.counters["nodes"] = static_cast<double>(tree.tree().size());
}
BENCHMARK(BM_PropagateEquations);

void BM_StrategyIteration(benchmark::State& state) {
  const EvaluatedTree& tree = grown_tree();
  Hyperparameters hp;
  hp.strategy = static_cast<int>(state.range(0));
  hp.max_nodes = 105;
  for (auto _ : state) {
    EngineState engine(housing(), tree.tree(), hp);
    benchmark::DoNotOptimize(run_strategy_iteration(engine));
  }
}
BENCHMARK(BM_StrategyIteration)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
