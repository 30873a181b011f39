#include <random>

#include "doctest.h"
#include "semreg/engine.hpp"
#include "semreg/errors.hpp"
#include "test_support.hpp"

using namespace semreg;
using namespace semreg::testing;

namespace {

Dataset line_data() {
  const std::vector<double> x1{-2, -1, 0, 1, 2, 3, 4};
  const std::vector<double> x2{1, 3, -1, 2, 5, -2, 4};
  std::vector<double> t;
  for (double v : x1) t.push_back(2 * v + 3);
  return Dataset({x1, x2}, t);
}

Hyperparameters with_strategy(int s) {
  Hyperparameters hp;
  hp.strategy = s;
  hp.max_iterations = 200;
  return hp;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("hyperparameter validation") {
  Hyperparameters hp;
  CHECK_NOTHROW(hp.validate());
  hp.strategy = 5;
  CHECK_THROWS_AS(hp.validate(), InvalidHyperparameters);
  hp = {};
  hp.min_improvement = -1;
  CHECK_THROWS_AS(hp.validate(), InvalidHyperparameters);
  hp = {};
  hp.max_nodes = 0;
  CHECK_THROWS_AS(hp.validate(), InvalidHyperparameters);
}

TEST_CASE("initial tree is the target mean") {
  const std::vector<double> t{5, 4, 1};
  const ExprTree tree = initial_tree(t);
  REQUIRE(tree.size() == 1);
  CHECK(tree.root().value == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("constant targets stop before the first iteration") {
  const Dataset data({{1, 2, 3}}, {7, 7, 7});
  const FitReport report = fit(data, Hyperparameters{});
  CHECK(report.iterations == 0);
  CHECK(report.stop_reason == StopReason::GoalReached);
  CHECK(report.train_mse == 0.0);
  CHECK(report.expression == "7");
  REQUIRE(report.trace.size() == 1);
  CHECK(report.trace[0].kind == StepKind::Initial);
}

TEST_CASE("a single-node budget keeps the initial constant") {
  Hyperparameters hp;
  hp.max_nodes = 1;
  const FitReport report = fit(line_data(), hp);
  CHECK(report.tree.size() == 1);
  CHECK(report.tree.root().is_constant());
  CHECK(report.stop_reason == StopReason::NoImprovement);
}

TEST_CASE("exact targets are recovered by every strategy") {
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    SUBCASE("variable") {
      const std::vector<double> x1{-2, -1, 0, 1, 2, 3, 4};
      const Dataset data({x1}, x1);
      const FitReport report = fit(data, with_strategy(s));
      CHECK(report.train_mse == 0.0);
      CHECK(report.expression == "x1");
    }
    SUBCASE("affine") {
      const FitReport report = fit(line_data(), with_strategy(s));
      CHECK(report.train_mse < 1e-20);
    }
  }
}

TEST_CASE("optimize_constants refits every constant") {
  const Dataset data = line_data();
  const EvaluatedTree start(parse_expression("((1 * x1) + 1)"), data);
  const EvaluatedTree tuned = optimize_constants(start, data, 1e-12);
  CHECK(tuned.tree().size() == start.tree().size());
  CHECK(tuned.tree().node(2).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(tuned.tree().node(4).value == doctest::Approx(3.0).epsilon(1e-9));

  EngineState state(data, tuned.tree(), Hyperparameters{});
  CHECK_FALSE(state.optimize_constants());
  CHECK(state.trace().size() == 1);
}

TEST_CASE("trace is monotone and within the node budget") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 12; ++rep) {
    const Dataset data = random_dataset(rng, 3, 25);
    Hyperparameters hp = with_strategy(1 + rep % 4);
    hp.max_nodes = 5 + 4 * static_cast<std::size_t>(rep);
    hp.max_iterations = 30;
    const FitReport report = fit(data, hp);
    CAPTURE(rep);
    for (std::size_t i = 1; i < report.trace.size(); ++i) {
      CHECK(report.trace[i].mse < report.trace[i - 1].mse);
      CHECK(report.trace[i].iteration >= report.trace[i - 1].iteration);
    }
    for (const auto& row : report.trace) CHECK(row.node_count <= *hp.max_nodes);
    const ExprTree reparsed = parse_expression(report.expression);
    CHECK(mean_squared_error(evaluate_root(reparsed, data), data.targets()) ==
          doctest::Approx(report.train_mse).epsilon(1e-12));
  }
}

TEST_CASE("min_improvement bounds every accepted step") {
  std::mt19937_64 rng(31);
  const Dataset data = random_dataset(rng, 2, 30);
  Hyperparameters hp = with_strategy(1);
  hp.min_improvement = 0.05;
  const FitReport report = fit(data, hp);
  for (std::size_t i = 1; i < report.trace.size(); ++i) {
    CHECK(report.trace[i - 1].mse - report.trace[i].mse > 0.05 * report.trace[i - 1].mse);
  }
}

TEST_CASE("max_iterations") {
  std::mt19937_64 rng(4);
  const Dataset data = random_dataset(rng, 3, 30);
  Hyperparameters hp = with_strategy(1);
  hp.max_iterations = 2;
  const FitReport report = fit(data, hp);
  CHECK(report.iterations <= 2);
  if (report.iterations == 2) CHECK(report.stop_reason == StopReason::MaxIterations);
}

TEST_CASE("goal MSE stops the fit") {
  const Dataset data = line_data();
  Hyperparameters hp = with_strategy(1);
  hp.goal_mse = 1e9;
  const FitReport report = fit(data, hp);
  CHECK(report.iterations == 0);
  CHECK(report.stop_reason == StopReason::GoalReached);
}

TEST_CASE("fits are deterministic") {
  std::mt19937_64 rng(77);
  const Dataset data = random_dataset(rng, 3, 40);
  for (int s = 1; s <= 4; ++s) {
    Hyperparameters hp = with_strategy(s);
    hp.max_nodes = 30;
    hp.max_iterations = 40;
    const FitReport a = fit(data, hp);
    const FitReport b = fit(data, hp);
    CHECK(a.expression == b.expression);
    CHECK(a.train_mse == b.train_mse);
    CHECK(a.trace.size() == b.trace.size());
  }
}

TEST_CASE("full recompute of equations changes nothing") {
  std::mt19937_64 rng(8);
  for (int s = 1; s <= 4; ++s) {
    const Dataset data = random_dataset(rng, 2, 20);
    Hyperparameters hp = with_strategy(s);
    hp.max_iterations = 15;
    const FitReport path = detail::fit(data, hp, {});
    const FitReport full = detail::fit(data, hp, {.full_recompute = true});
    CHECK(path.expression == full.expression);
    CHECK(path.train_mse == full.train_mse);
  }
}

TEST_CASE("both constant optimization modes stop at a fixed point of the other") {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    const Dataset data = random_dataset(rng, 2, 15);
    const auto tree = random_valid_tree(rng, data, 15);
    if (!tree || smallest_divisor(*tree) < 1e-2) continue;
    Hyperparameters hp;
    hp.min_improvement = 1e-6;
    EngineState cyclic(data, tree->tree(), hp);
    cyclic.optimize_constants();
    EngineState global(data, tree->tree(), hp, {.global_best_constants = true});
    global.optimize_constants();
    CHECK(global.mse() <= mean_squared_error(tree->root_semantics(), data.targets()));

    EngineState cyclic_then_global(data, cyclic.tree().tree(), hp, {.global_best_constants = true});
    CHECK_FALSE(cyclic_then_global.optimize_constants());
    EngineState global_then_cyclic(data, global.tree().tree(), hp);
    CHECK_FALSE(global_then_cyclic.optimize_constants());
  }
}

}  // TEST_SUITE
