#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semreg/dataset.hpp"
#include "semreg/expr_tree.hpp"
#include "semreg/search.hpp"

namespace semreg {

struct Hyperparameters {
  /// nullopt: no limit.
  std::optional<std::size_t> max_iterations;
  /// Stop once the training MSE is at or below this value.
  double goal_mse = 0.0;
  /// A change is applied only if it lowers the MSE by more than this
  /// fraction of the current MSE.
  double min_improvement = 1e-6;
  /// nullopt: no limit.
  std::optional<std::size_t> max_nodes;
  int strategy = 1;

  /// Throws InvalidHyperparameters.
  void validate() const;
};

enum class StopReason : std::uint8_t { GoalReached, NoImprovement, MaxIterations };
std::string_view to_string(StopReason reason);

enum class StepKind : std::uint8_t {
  Initial,
  Constant,
  Variable,
  ConstantVariable,
  ConstantExpression,
  ConstantOptimization,
};
std::string_view to_string(StepKind kind);
StepKind step_kind(SearchKind kind);

/// One change to the tree, with the tree as it stands afterwards.
struct TraceEntry {
  std::size_t iteration = 0;
  StepKind kind = StepKind::Initial;
  /// Replaced node in the tree before the change; kNoNode for Initial and
  /// ConstantOptimization.
  NodeId node_id = kNoNode;
  std::string expression;
  double mse = 0.0;
  std::size_t node_count = 0;
  std::size_t height = 0;
};

struct FitReport {
  ExprTree tree = ExprTree::constant(0.0);
  std::string expression;
  double train_mse = 0.0;
  std::vector<TraceEntry> trace;
  StopReason stop_reason = StopReason::NoImprovement;
  std::size_t iterations = 0;
  double seconds = 0.0;
};

/// Single constant at the mean of the targets.
ExprTree initial_tree(std::span<const double> targets);

namespace detail {

/// Alternatives kept for equivalence testing only.
struct EngineOptions {
  /// Re-propagate every node equation before each constant update instead of
  /// deriving only the edited node's root path.
  bool full_recompute = false;
  /// Constant optimization applies only the single best constant per pass
  /// instead of cycling through all constants.
  bool global_best_constants = false;
};

}  // namespace detail

/// Mutable fitting state: the current tree, its MSE and the trace so far.
class EngineState {
 public:
  EngineState(const Dataset& data, Hyperparameters hp, detail::EngineOptions options = {});
  /// Continues from an existing tree. Throws if the tree is invalid on data.
  EngineState(const Dataset& data, ExprTree tree, Hyperparameters hp,
              detail::EngineOptions options = {});

  const Dataset& data() const { return *data_; }
  const Hyperparameters& hyperparameters() const { return hp_; }
  const detail::EngineOptions& options() const { return options_; }
  const EvaluatedTree& tree() const { return tree_; }
  double mse() const { return mse_; }
  std::size_t iteration() const { return iteration_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  /// Starts the next iteration; trace rows added from now on carry its number.
  void begin_iteration() { ++iteration_; }

  /// Applies the first outcome, in ranking order, that is valid on the data,
  /// respects max_nodes and clears the improvement threshold. Returns whether
  /// one was applied.
  bool apply_best(std::vector<SearchOutcome> outcomes);

  /// Cyclic constant refinement until no constant improves. Returns whether
  /// the tree changed; a change adds one ConstantOptimization trace row.
  bool optimize_constants();

 private:
  bool commit(const SearchOutcome& outcome, StepKind kind, bool record);
  void record(StepKind kind, NodeId node_id);

  const Dataset* data_;
  Hyperparameters hp_;
  detail::EngineOptions options_;
  EvaluatedTree tree_;
  double mse_ = 0.0;
  std::size_t iteration_ = 0;
  std::vector<TraceEntry> trace_;
};

/// Tree with every constant refined in turn until a full pass changes
/// nothing.
EvaluatedTree optimize_constants(const EvaluatedTree& tree, const Dataset& data,
                                 double min_improvement);

/// One iteration of the configured strategy. Returns whether the tree
/// changed.
bool run_strategy_iteration(EngineState& state);

/// Full fit from the initial constant. Throws InvalidHyperparameters.
FitReport fit(const Dataset& data, const Hyperparameters& hp);

namespace detail {
FitReport fit(const Dataset& data, const Hyperparameters& hp, const EngineOptions& options);
}  // namespace detail

}  // namespace semreg
