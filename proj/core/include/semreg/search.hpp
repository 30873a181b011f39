#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "semreg/constant_fit.hpp"
#include "semreg/dataset.hpp"
#include "semreg/expr_tree.hpp"
#include "semreg/node_equation.hpp"

namespace semreg {

/// Declaration order is the tie-break order.
enum class SearchKind : std::uint8_t { Constant, Variable, ConstantVariable, ConstantExpression };

std::string_view to_string(SearchKind kind);

/// A proposed replacement of the subtree at `node_id`.
struct SearchOutcome {
  NodeId node_id = 0;
  ExprTree replacement = ExprTree::constant(0.0);
  double predicted_mse = 0.0;
  double predicted_reduction = 0.0;
  SearchKind kind = SearchKind::Constant;
  /// Variable used by the replacement, or kNoNode.
  std::size_t variable = kNoNode;
  Op op = Op::Add;
};

/// True when `lhs` ranks ahead of `rhs`: larger reduction, then kind, node,
/// variable and operator order.
bool ranks_before(const SearchOutcome& lhs, const SearchOutcome& rhs);

/// Per-iteration state shared by every search.
class SearchContext {
 public:
  /// `current_mse` is the tree's root MSE; a search only reports outcomes
  /// whose reduction exceeds current_mse * min_improvement.
  SearchContext(const Dataset& data, double current_mse, double min_improvement);

  const Dataset& data() const { return *data_; }
  double current_mse() const { return current_mse_; }
  double min_reduction() const { return min_reduction_; }
  /// Non-constant rows.
  bool usable(std::size_t variable) const { return usable_[variable]; }
  /// Usable and free of zeros.
  bool usable_divisor(std::size_t variable) const { return divisor_[variable]; }

  /// Outcome for a candidate at `fitted_mse`, or nullopt below threshold.
  std::optional<double> reduction_for(double fitted_mse) const;

 private:
  const Dataset* data_;
  double current_mse_;
  double min_reduction_;
  std::vector<bool> usable_;
  std::vector<bool> divisor_;
};

/// Replace the node with the best constant.
std::optional<SearchOutcome> constant_search(const SearchContext& ctx, const EvaluatedTree& tree,
                                             NodeId id, const NodeEquation& eq);

/// Replace the node with the best dataset variable. Constant rows and the
/// node's own variable are skipped.
std::optional<SearchOutcome> variable_search(const SearchContext& ctx, const EvaluatedTree& tree,
                                             NodeId id, const NodeEquation& eq);

/// Replace the node with (k op x) for the best variable x, op and constant k.
/// Skips the combination the node already is.
std::optional<SearchOutcome> constant_variable_search(const SearchContext& ctx,
                                                      const EvaluatedTree& tree, NodeId id,
                                                      const NodeEquation& eq);

/// Replace an operator node p with (k + p) or (k * p). The sum is skipped
/// when p is a sum or difference with a constant child, the product when p
/// is a product or quotient with a constant child.
std::optional<SearchOutcome> constant_expression_search(const SearchContext& ctx,
                                                        const EvaluatedTree& tree, NodeId id,
                                                        const NodeEquation& eq);

}  // namespace semreg
