#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "semreg/dataset.hpp"

namespace semreg {

enum class Op : std::uint8_t { Add, Sub, Mul, Div };

char op_symbol(Op op);
/// Element-wise application, `lhs op rhs`.
double apply_op(Op op, double lhs, double rhs);

/// Pre-order index into an ExprTree. Index 0 is the root.
using NodeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Output vector of a node over all N patterns.
using Semantics = std::vector<double>;

struct Node {
  enum class Kind : std::uint8_t { Constant, Variable, Operator };

  Kind kind = Kind::Constant;
  Op op = Op::Add;
  double value = 0.0;         // Constant only
  std::size_t variable = 0;   // Variable only, 0-based
  std::size_t subtree_size = 1;

  bool is_constant() const { return kind == Kind::Constant; }
  bool is_variable() const { return kind == Kind::Variable; }
  bool is_operator() const { return kind == Kind::Operator; }
  bool is_terminal() const { return kind != Kind::Operator; }
};

struct TreeMetrics {
  std::size_t node_count = 0;
  std::size_t height = 0;  // in nodes; a single leaf has height 1
};

/// Immutable binary arithmetic expression stored in pre-order. Children of
/// an operator at index i are i+1 and i+1+size(i+1).
class ExprTree {
 public:
  static ExprTree constant(double value);
  static ExprTree variable(std::size_t index);
  static ExprTree binary(Op op, const ExprTree& left, const ExprTree& right);

  std::size_t size() const { return nodes_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(NodeId id) const;
  const Node& root() const { return nodes_.front(); }

  NodeId left(NodeId id) const;
  NodeId right(NodeId id) const;
  NodeId parent(NodeId id) const { return parents_.at(id); }
  /// Nodes from the root down to `id`, inclusive.
  std::vector<NodeId> path_from_root(NodeId id) const;

  ExprTree subtree(NodeId id) const;
  /// New tree with the subtree at `id` swapped for `replacement`.
  /// Throws InvalidNodeId.
  ExprTree with_replacement(NodeId id, const ExprTree& replacement) const;

  std::size_t max_variable_index() const;

  friend bool operator==(const ExprTree& lhs, const ExprTree& rhs);

 private:
  explicit ExprTree(std::vector<Node> nodes);
  void rebuild_parents();

  std::vector<Node> nodes_;
  std::vector<NodeId> parents_;
};

bool operator==(const Node& lhs, const Node& rhs);

TreeMetrics tree_metrics(const ExprTree& tree);

/// Bottom-up evaluation of every node. Throws DivisionByZero when a
/// denominator element is exactly 0 and NonFiniteResult on overflow.
std::vector<Semantics> evaluate_tree(const ExprTree& tree, const Dataset& data);

/// Root output only. Same error behaviour as evaluate_tree.
Semantics evaluate_root(const ExprTree& tree, const Dataset& data);

double mean_squared_error(std::span<const double> outputs, std::span<const double> targets);

/// A tree together with the cached semantics of every node on one dataset.
class EvaluatedTree {
 public:
  EvaluatedTree(ExprTree tree, const Dataset& data);

  const ExprTree& tree() const { return tree_; }
  const Semantics& semantics(NodeId id) const { return semantics_.at(id); }
  const Semantics& root_semantics() const { return semantics_.front(); }
  const std::vector<Semantics>& all_semantics() const { return semantics_; }
  std::size_t num_patterns() const { return semantics_.front().size(); }

 private:
  friend std::optional<EvaluatedTree> try_replace_subtree(const EvaluatedTree&, NodeId,
                                                         const ExprTree&, const Dataset&);
  EvaluatedTree(ExprTree tree, std::vector<Semantics> semantics)
      : tree_(std::move(tree)), semantics_(std::move(semantics)) {}

  ExprTree tree_;
  std::vector<Semantics> semantics_;
};

/// Swaps the subtree at `id`. Semantics outside the replaced subtree and its
/// root path are carried over; only the replacement and the path above it
/// are recomputed. Throws InvalidNodeId, DivisionByZero, NonFiniteResult.
EvaluatedTree replace_subtree(const EvaluatedTree& tree, NodeId id, const ExprTree& replacement,
                              const Dataset& data);

/// As replace_subtree, but an invalid result yields nullopt instead of
/// throwing. Still throws InvalidNodeId.
std::optional<EvaluatedTree> try_replace_subtree(const EvaluatedTree& tree, NodeId id,
                                                 const ExprTree& replacement,
                                                 const Dataset& data);

}  // namespace semreg
