#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semreg/expr_tree.hpp"
#include "semreg/forbidden_set.hpp"

namespace semreg {

/// Whole-tree MSE as a function of one node's outputs o:
///
///   MSE(o) = 1/N * sum_i ((a_i * o_i - b_i) / (c_i * o_i - d_i))^2
///
/// plus the set of outputs that would break an ancestor division.
struct NodeEquation {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> d;
  ForbiddenSet forbidden;

  std::size_t size() const { return a.size(); }
};

/// a = 1, b = targets, c = 0, d = -1, no forbidden semantics.
NodeEquation root_equation(std::span<const double> targets);

/// Equation for one child of an `op` node with equation `parent`, given the
/// current outputs of both children.
NodeEquation derive_child_equation(const NodeEquation& parent, Op op, Side side,
                                   std::span<const double> left, std::span<const double> right);

std::pair<NodeEquation, NodeEquation> derive_child_equations(const NodeEquation& parent, Op op,
                                                             std::span<const double> left,
                                                             std::span<const double> right);

/// Equations of every node, top-down, indexed by pre-order id.
std::vector<NodeEquation> propagate_equations(const EvaluatedTree& tree,
                                              std::span<const double> targets);

/// Equation of a single node, derived along its root path only.
NodeEquation equation_at(const EvaluatedTree& tree, std::span<const double> targets, NodeId id);

/// |c*o - d| below this counts as a pole.
inline constexpr double kPoleGuard = 1e-300;

/// MSE the tree would have if this node output `candidate`. nullopt when the
/// candidate is forbidden or hits a pole of the equation.
std::optional<double> equation_mse(const NodeEquation& eq, std::span<const double> candidate);

/// equation_mse for the constant semantics (k, ..., k).
std::optional<double> equation_mse_constant(const NodeEquation& eq, double k);

/// equation_mse without the forbidden-set check.
std::optional<double> equation_value(const NodeEquation& eq, std::span<const double> candidate);
std::optional<double> equation_value_constant(const NodeEquation& eq, double k);

}  // namespace semreg
