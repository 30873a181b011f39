#include "semreg/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "semreg/errors.hpp"
#include "semreg/expression_text.hpp"
#include "semreg/node_equation.hpp"

namespace semreg {

void Hyperparameters::validate() const {
  if (strategy < 1 || strategy > 4) {
    throw InvalidHyperparameters("strategy must be 1, 2, 3 or 4, got " + std::to_string(strategy));
  }
  if (!(min_improvement > 0.0 && min_improvement < 1.0)) {
    throw InvalidHyperparameters("min_improvement must lie in (0, 1), got " +
                                 format_real(min_improvement));
  }
  if (!(goal_mse >= 0.0) || !std::isfinite(goal_mse)) {
    throw InvalidHyperparameters("goal_mse must be a finite value >= 0, got " +
                                 format_real(goal_mse));
  }
  if (max_nodes && *max_nodes == 0) throw InvalidHyperparameters("max_nodes must be >= 1");
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::GoalReached: return "goal_reached";
    case StopReason::NoImprovement: return "no_improvement";
    case StopReason::MaxIterations: return "max_iterations";
  }
  return "unknown";
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Initial: return "initial";
    case StepKind::Constant: return "constant";
    case StepKind::Variable: return "variable";
    case StepKind::ConstantVariable: return "constant_variable";
    case StepKind::ConstantExpression: return "constant_expression";
    case StepKind::ConstantOptimization: return "constant_optimization";
  }
  return "unknown";
}

StepKind step_kind(SearchKind kind) {
  switch (kind) {
    case SearchKind::Constant: return StepKind::Constant;
    case SearchKind::Variable: return StepKind::Variable;
    case SearchKind::ConstantVariable: return StepKind::ConstantVariable;
    case SearchKind::ConstantExpression: return StepKind::ConstantExpression;
  }
  return StepKind::Constant;
}

ExprTree initial_tree(std::span<const double> targets) {
  double sum = 0.0;
  for (double t : targets) sum += t;
  return ExprTree::constant(sum / static_cast<double>(targets.size()));
}

namespace {

double tree_mse(const EvaluatedTree& tree, const Dataset& data) {
  return mean_squared_error(tree.root_semantics(), data.targets());
}

}  // namespace

EngineState::EngineState(const Dataset& data, Hyperparameters hp, detail::EngineOptions options)
    : EngineState(data, initial_tree(data.targets()), std::move(hp), options) {}

EngineState::EngineState(const Dataset& data, ExprTree tree, Hyperparameters hp,
                         detail::EngineOptions options)
    : data_(&data), hp_(std::move(hp)), options_(options), tree_(std::move(tree), data) {
  hp_.validate();
  mse_ = tree_mse(tree_, data);
  record(StepKind::Initial, kNoNode);
}

void EngineState::record(StepKind kind, NodeId node_id) {
  const TreeMetrics metrics = tree_metrics(tree_.tree());
  trace_.push_back(TraceEntry{iteration_, kind, node_id,
                              format_expression(tree_.tree(), data_->variable_names()), mse_,
                              metrics.node_count, metrics.height});
}

bool EngineState::commit(const SearchOutcome& outcome, StepKind kind, bool record_step) {
  const ExprTree& current = tree_.tree();
  const std::size_t new_size =
      current.size() - current.node(outcome.node_id).subtree_size + outcome.replacement.size();
  if (hp_.max_nodes && new_size > *hp_.max_nodes) return false;
  auto next = try_replace_subtree(tree_, outcome.node_id, outcome.replacement, *data_);
  if (!next) return false;
  const double next_mse = tree_mse(*next, *data_);
  if (!std::isfinite(next_mse)) return false;
  const double reduction = mse_ - next_mse;
  if (!(reduction > 0.0) || !(reduction > mse_ * hp_.min_improvement)) return false;
  tree_ = std::move(*next);
  mse_ = next_mse;
  if (record_step) record(kind, outcome.node_id);
  return true;
}

bool EngineState::apply_best(std::vector<SearchOutcome> outcomes) {
  std::sort(outcomes.begin(), outcomes.end(), ranks_before);
  for (const auto& outcome : outcomes) {
    if (commit(outcome, step_kind(outcome.kind), true)) return true;
  }
  return false;
}

bool EngineState::optimize_constants() {
  const auto equation_for = [&](NodeId id) {
    if (options_.full_recompute) {
      return std::move(propagate_equations(tree_, data_->targets())[id]);
    }
    return equation_at(tree_, data_->targets(), id);
  };

  bool changed = false;
  if (options_.global_best_constants) {
    for (;;) {
      const SearchContext ctx(*data_, mse_, hp_.min_improvement);
      std::vector<SearchOutcome> outcomes;
      for (NodeId id = 0; id < tree_.tree().size(); ++id) {
        if (!tree_.tree().node(id).is_constant()) continue;
        if (auto out = constant_search(ctx, tree_, id, equation_for(id))) {
          outcomes.push_back(std::move(*out));
        }
      }
      std::sort(outcomes.begin(), outcomes.end(), ranks_before);
      bool applied = false;
      for (const auto& out : outcomes) {
        if (commit(out, StepKind::ConstantOptimization, false)) {
          applied = true;
          break;
        }
      }
      if (!applied) break;
      changed = true;
    }
  } else {
    // Replacing a constant by a constant keeps every pre-order id stable.
    for (bool pass_changed = true; pass_changed;) {
      pass_changed = false;
      for (NodeId id = 0; id < tree_.tree().size(); ++id) {
        if (!tree_.tree().node(id).is_constant()) continue;
        const SearchContext ctx(*data_, mse_, hp_.min_improvement);
        const auto out = constant_search(ctx, tree_, id, equation_for(id));
        if (out && commit(*out, StepKind::ConstantOptimization, false)) pass_changed = true;
      }
      changed = changed || pass_changed;
    }
  }
  if (changed) record(StepKind::ConstantOptimization, kNoNode);
  return changed;
}

EvaluatedTree optimize_constants(const EvaluatedTree& tree, const Dataset& data,
                                 double min_improvement) {
  Hyperparameters hp;
  hp.min_improvement = min_improvement;
  EngineState state(data, tree.tree(), hp);
  state.optimize_constants();
  return state.tree();
}

namespace {

enum class NodeSet : std::uint8_t { All, Constants, Terminals, NonTerminals, VariablesAndNonTerminals };

bool in_set(const Node& node, NodeSet set) {
  switch (set) {
    case NodeSet::All: return true;
    case NodeSet::Constants: return node.is_constant();
    case NodeSet::Terminals: return node.is_terminal();
    case NodeSet::NonTerminals: return node.is_operator();
    case NodeSet::VariablesAndNonTerminals: return !node.is_constant();
  }
  return false;
}

// Searches over the tree as it stood at the start of the iteration.
class IterationSearch {
 public:
  explicit IterationSearch(const EngineState& state)
      : state_(state),
        equations_(propagate_equations(state.tree(), state.data().targets())),
        ctx_(state.data(), state.mse(), state.hyperparameters().min_improvement) {}

  void run(SearchKind kind, NodeSet set, std::vector<SearchOutcome>& out) const {
    const EvaluatedTree& tree = state_.tree();
    for (NodeId id = 0; id < tree.tree().size(); ++id) {
      const Node& node = tree.tree().node(id);
      if (!in_set(node, set) || !growth_allowed(kind, node)) continue;
      std::optional<SearchOutcome> result;
      switch (kind) {
        case SearchKind::Constant:
          result = constant_search(ctx_, tree, id, equations_[id]);
          break;
        case SearchKind::Variable:
          result = variable_search(ctx_, tree, id, equations_[id]);
          break;
        case SearchKind::ConstantVariable:
          result = constant_variable_search(ctx_, tree, id, equations_[id]);
          break;
        case SearchKind::ConstantExpression:
          if (node.is_operator()) {
            result = constant_expression_search(ctx_, tree, id, equations_[id]);
          }
          break;
      }
      if (result) out.push_back(std::move(*result));
    }
  }

  std::vector<SearchOutcome> run(SearchKind kind, NodeSet set) const {
    std::vector<SearchOutcome> out;
    run(kind, set, out);
    return out;
  }

 private:
  // Node budget: (k op x) needs max_nodes - count + subtree >= 3 and
  // (k op p) needs max_nodes - count >= 2.
  bool growth_allowed(SearchKind kind, const Node& node) const {
    const auto& max_nodes = state_.hyperparameters().max_nodes;
    if (!max_nodes) return true;
    const auto limit = static_cast<long long>(*max_nodes);
    const auto count = static_cast<long long>(state_.tree().tree().size());
    switch (kind) {
      case SearchKind::ConstantVariable:
        return limit - count + static_cast<long long>(node.subtree_size) >= 3;
      case SearchKind::ConstantExpression:
        return limit - count >= 2;
      default:
        return true;
    }
  }

  const EngineState& state_;
  std::vector<NodeEquation> equations_;
  SearchContext ctx_;
};

bool strategy_all_searches(EngineState& state, NodeSet constant_nodes) {
  std::vector<SearchOutcome> outcomes;
  {
    const IterationSearch search(state);
    search.run(SearchKind::Constant, constant_nodes, outcomes);
    search.run(SearchKind::Variable, NodeSet::All, outcomes);
    search.run(SearchKind::ConstantVariable, NodeSet::All, outcomes);
    search.run(SearchKind::ConstantExpression, NodeSet::NonTerminals, outcomes);
  }
  return state.apply_best(std::move(outcomes));
}

// Steps (a) to (d) of the cascade; the first step that applies a change
// ends it.
bool cascade(EngineState& state) {
  const IterationSearch search(state);
  if (state.apply_best(search.run(SearchKind::Variable, NodeSet::Constants))) return true;
  if (state.apply_best(search.run(SearchKind::ConstantExpression, NodeSet::NonTerminals))) {
    return true;
  }
  if (state.apply_best(search.run(SearchKind::ConstantVariable, NodeSet::Terminals))) return true;
  std::vector<SearchOutcome> joint;
  search.run(SearchKind::Constant, NodeSet::VariablesAndNonTerminals, joint);
  search.run(SearchKind::Variable, NodeSet::VariablesAndNonTerminals, joint);
  search.run(SearchKind::ConstantVariable, NodeSet::NonTerminals, joint);
  return state.apply_best(std::move(joint));
}

}  // namespace

bool run_strategy_iteration(EngineState& state) {
  switch (state.hyperparameters().strategy) {
    case 1:
      return strategy_all_searches(state, NodeSet::All);
    case 2: {
      const bool modified = strategy_all_searches(state, NodeSet::VariablesAndNonTerminals);
      if (modified) state.optimize_constants();
      return modified;
    }
    case 3: {
      const bool modified = cascade(state);
      if (modified) state.optimize_constants();
      return modified;
    }
    case 4: {
      bool constant_changed = false;
      {
        const IterationSearch search(state);
        constant_changed = state.apply_best(search.run(SearchKind::Constant, NodeSet::Constants));
      }
      return constant_changed || cascade(state);
    }
    default:
      throw InvalidHyperparameters("unknown strategy " +
                                   std::to_string(state.hyperparameters().strategy));
  }
}

namespace detail {

FitReport fit(const Dataset& data, const Hyperparameters& hp, const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  EngineState state(data, hp, options);
  StopReason reason = StopReason::NoImprovement;
  for (;;) {
    if (state.mse() <= hp.goal_mse) {
      reason = StopReason::GoalReached;
      break;
    }
    if (hp.max_iterations && state.iteration() >= *hp.max_iterations) {
      reason = StopReason::MaxIterations;
      break;
    }
    state.begin_iteration();
    if (!run_strategy_iteration(state)) {
      reason = StopReason::NoImprovement;
      break;
    }
  }
  FitReport report;
  report.tree = state.tree().tree();
  report.expression = format_expression(report.tree, data.variable_names());
  report.train_mse = state.mse();
  report.trace = state.trace();
  report.stop_reason = reason;
  report.iterations = state.iteration();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

FitReport fit(const Dataset& data, const Hyperparameters& hp) {
  return detail::fit(data, hp, {});
}

}  // namespace semreg
