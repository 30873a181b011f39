#include "semreg/expr_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semreg/errors.hpp"

namespace semreg {

char op_symbol(Op op) {
  switch (op) {
    case Op::Add: return '+';
    case Op::Sub: return '-';
    case Op::Mul: return '*';
    case Op::Div: return '/';
  }
  return '?';
}

double apply_op(Op op, double lhs, double rhs) {
  switch (op) {
    case Op::Add: return lhs + rhs;
    case Op::Sub: return lhs - rhs;
    case Op::Mul: return lhs * rhs;
    case Op::Div: return lhs / rhs;
  }
  return 0.0;
}

bool operator==(const Node& lhs, const Node& rhs) {
  if (lhs.kind != rhs.kind || lhs.subtree_size != rhs.subtree_size) return false;
  switch (lhs.kind) {
    case Node::Kind::Constant: return lhs.value == rhs.value;
    case Node::Kind::Variable: return lhs.variable == rhs.variable;
    case Node::Kind::Operator: return lhs.op == rhs.op;
  }
  return false;
}

bool operator==(const ExprTree& lhs, const ExprTree& rhs) { return lhs.nodes_ == rhs.nodes_; }

ExprTree::ExprTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) { rebuild_parents(); }

void ExprTree::rebuild_parents() {
  parents_.assign(nodes_.size(), kNoNode);
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].is_operator()) continue;
    parents_[left(i)] = i;
    parents_[right(i)] = i;
  }
}

ExprTree ExprTree::constant(double value) {
  Node n;
  n.kind = Node::Kind::Constant;
  n.value = value;
  return ExprTree({n});
}

ExprTree ExprTree::variable(std::size_t index) {
  Node n;
  n.kind = Node::Kind::Variable;
  n.variable = index;
  return ExprTree({n});
}

ExprTree ExprTree::binary(Op op, const ExprTree& left, const ExprTree& right) {
  std::vector<Node> nodes;
  nodes.reserve(1 + left.size() + right.size());
  Node n;
  n.kind = Node::Kind::Operator;
  n.op = op;
  n.subtree_size = 1 + left.size() + right.size();
  nodes.push_back(n);
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return ExprTree(std::move(nodes));
}

const Node& ExprTree::node(NodeId id) const {
  if (id >= nodes_.size()) throw InvalidNodeId(id);
  return nodes_[id];
}

NodeId ExprTree::left(NodeId id) const {
  if (!node(id).is_operator()) throw std::logic_error("left() on a terminal node");
  return id + 1;
}

NodeId ExprTree::right(NodeId id) const {
  if (!node(id).is_operator()) throw std::logic_error("right() on a terminal node");
  return id + 1 + nodes_[id + 1].subtree_size;
}

std::vector<NodeId> ExprTree::path_from_root(NodeId id) const {
  if (id >= nodes_.size()) throw InvalidNodeId(id);
  std::vector<NodeId> path;
  for (NodeId cur = id; cur != kNoNode; cur = parents_[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

ExprTree ExprTree::subtree(NodeId id) const {
  const Node& n = node(id);
  return ExprTree(std::vector<Node>(nodes_.begin() + static_cast<std::ptrdiff_t>(id),
                                    nodes_.begin() + static_cast<std::ptrdiff_t>(id + n.subtree_size)));
}

ExprTree ExprTree::with_replacement(NodeId id, const ExprTree& replacement) const {
  const std::size_t old_size = node(id).subtree_size;
  const auto delta = static_cast<std::ptrdiff_t>(replacement.size()) -
                     static_cast<std::ptrdiff_t>(old_size);
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(nodes_.size()) + delta));
  nodes.insert(nodes.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(id));
  nodes.insert(nodes.end(), replacement.nodes_.begin(), replacement.nodes_.end());
  nodes.insert(nodes.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(id + old_size),
               nodes_.end());
  for (NodeId cur = parents_[id]; cur != kNoNode; cur = parents_[cur]) {
    nodes[cur].subtree_size = static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(nodes[cur].subtree_size) + delta);
  }
  return ExprTree(std::move(nodes));
}

std::size_t ExprTree::max_variable_index() const {
  std::size_t max_index = 0;
  for (const Node& n : nodes_) {
    if (n.is_variable()) max_index = std::max(max_index, n.variable);
  }
  return max_index;
}

TreeMetrics tree_metrics(const ExprTree& tree) {
  // depth[i] in nodes from the root; parents precede children in pre-order.
  std::vector<std::size_t> depth(tree.size(), 1);
  std::size_t height = 0;
  for (NodeId i = 0; i < tree.size(); ++i) {
    if (tree.parent(i) != kNoNode) depth[i] = depth[tree.parent(i)] + 1;
    height = std::max(height, depth[i]);
  }
  return {tree.size(), height};
}

namespace {

enum class EvalFailure { None, DivisionByZero, NonFinite };

struct EvalStatus {
  EvalFailure failure = EvalFailure::None;
  NodeId node = 0;
  std::size_t pattern = 0;
};

[[noreturn]] void raise(const EvalStatus& status) {
  if (status.failure == EvalFailure::DivisionByZero) {
    throw DivisionByZero(status.node, status.pattern);
  }
  throw NonFiniteResult(status.node, status.pattern);
}

EvalStatus combine(Op op, const Semantics& lhs, const Semantics& rhs, Semantics& out, NodeId id) {
  const std::size_t n = lhs.size();
  out.resize(n);
  if (op == Op::Div) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rhs[i] == 0.0) return {EvalFailure::DivisionByZero, id, i};
    }
  }
  switch (op) {
    case Op::Add:
      for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] + rhs[i];
      break;
    case Op::Sub:
      for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] - rhs[i];
      break;
    case Op::Mul:
      for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] * rhs[i];
      break;
    case Op::Div:
      for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] / rhs[i];
      break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(out[i])) return {EvalFailure::NonFinite, id, i};
  }
  return {};
}

// Evaluates `tree` into out[offset + i] for every node i of the tree.
EvalStatus evaluate_into(const ExprTree& tree, const Dataset& data, std::vector<Semantics>& out,
                         std::size_t offset) {
  const std::size_t n = data.num_patterns();
  for (NodeId local = tree.size(); local-- > 0;) {
    const Node& node = tree.node(local);
    Semantics& sem = out[offset + local];
    switch (node.kind) {
      case Node::Kind::Constant:
        if (!std::isfinite(node.value)) return {EvalFailure::NonFinite, offset + local, 0};
        sem.assign(n, node.value);
        break;
      case Node::Kind::Variable: {
        if (node.variable >= data.num_variables()) {
          throw std::out_of_range("variable index " + std::to_string(node.variable) +
                                  " out of range");
        }
        const auto row = data.variable(node.variable);
        sem.assign(row.begin(), row.end());
        break;
      }
      case Node::Kind::Operator: {
        const EvalStatus status = combine(node.op, out[offset + tree.left(local)],
                                          out[offset + tree.right(local)], sem, offset + local);
        if (status.failure != EvalFailure::None) return status;
        break;
      }
    }
  }
  return {};
}

}  // namespace

std::vector<Semantics> evaluate_tree(const ExprTree& tree, const Dataset& data) {
  std::vector<Semantics> out(tree.size());
  const EvalStatus status = evaluate_into(tree, data, out, 0);
  if (status.failure != EvalFailure::None) raise(status);
  return out;
}

Semantics evaluate_root(const ExprTree& tree, const Dataset& data) {
  return std::move(evaluate_tree(tree, data).front());
}

double mean_squared_error(std::span<const double> outputs, std::span<const double> targets) {
  double sum = 0.0;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const double e = outputs[i] - targets[i];
    sum += e * e;
  }
  return sum / static_cast<double>(outputs.size());
}

EvaluatedTree::EvaluatedTree(ExprTree tree, const Dataset& data)
    : tree_(std::move(tree)), semantics_(evaluate_tree(tree_, data)) {}

std::optional<EvaluatedTree> try_replace_subtree(const EvaluatedTree& tree, NodeId id,
                                                 const ExprTree& replacement,
                                                 const Dataset& data) {
  const ExprTree& old_tree = tree.tree();
  const std::size_t old_size = old_tree.node(id).subtree_size;
  ExprTree new_tree = old_tree.with_replacement(id, replacement);

  const auto& old_sem = tree.all_semantics();
  std::vector<Semantics> sem(new_tree.size());
  for (NodeId i = 0; i < id; ++i) sem[i] = old_sem[i];
  for (NodeId i = id + old_size; i < old_sem.size(); ++i) {
    sem[i - old_size + replacement.size()] = old_sem[i];
  }
  if (evaluate_into(replacement, data, sem, id).failure != EvalFailure::None) return std::nullopt;

  for (NodeId cur = new_tree.parent(id); cur != kNoNode; cur = new_tree.parent(cur)) {
    const Node& n = new_tree.node(cur);
    Semantics out;
    if (combine(n.op, sem[new_tree.left(cur)], sem[new_tree.right(cur)], out, cur).failure !=
        EvalFailure::None) {
      return std::nullopt;
    }
    sem[cur] = std::move(out);
  }
  return EvaluatedTree(std::move(new_tree), std::move(sem));
}

EvaluatedTree replace_subtree(const EvaluatedTree& tree, NodeId id, const ExprTree& replacement,
                              const Dataset& data) {
  if (auto result = try_replace_subtree(tree, id, replacement, data)) return std::move(*result);
  // Re-run the full evaluation to report which node failed.
  evaluate_tree(tree.tree().with_replacement(id, replacement), data);
  throw std::logic_error("replacement failed without an evaluation error");
}

}  // namespace semreg
