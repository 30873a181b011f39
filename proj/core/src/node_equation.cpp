#include "semreg/node_equation.hpp"

#include <cmath>

namespace semreg {

NodeEquation root_equation(std::span<const double> targets) {
  const std::size_t n = targets.size();
  NodeEquation eq;
  eq.a.assign(n, 1.0);
  eq.b.assign(targets.begin(), targets.end());
  eq.c.assign(n, 0.0);
  eq.d.assign(n, -1.0);
  return eq;
}

NodeEquation derive_child_equation(const NodeEquation& parent, Op op, Side side,
                                   std::span<const double> left, std::span<const double> right) {
  const std::size_t n = parent.size();
  const auto& a = parent.a;
  const auto& b = parent.b;
  const auto& c = parent.c;
  const auto& d = parent.d;
  NodeEquation eq;
  eq.a.resize(n);
  eq.b.resize(n);
  eq.c.resize(n);
  eq.d.resize(n);
  const bool first = side == Side::First;
  // x = left output, y = right output; the other child is held fixed.
  switch (op) {
    case Op::Add:
      for (std::size_t i = 0; i < n; ++i) {
        const double other = first ? right[i] : left[i];
        eq.a[i] = a[i];
        eq.b[i] = b[i] - a[i] * other;
        eq.c[i] = c[i];
        eq.d[i] = d[i] - c[i] * other;
      }
      break;
    case Op::Sub:
      if (first) {
        for (std::size_t i = 0; i < n; ++i) {
          eq.a[i] = a[i];
          eq.b[i] = b[i] + a[i] * right[i];
          eq.c[i] = c[i];
          eq.d[i] = d[i] + c[i] * right[i];
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          eq.a[i] = a[i];
          eq.b[i] = a[i] * left[i] - b[i];
          eq.c[i] = c[i];
          eq.d[i] = c[i] * left[i] - d[i];
        }
      }
      break;
    case Op::Mul:
      for (std::size_t i = 0; i < n; ++i) {
        const double other = first ? right[i] : left[i];
        eq.a[i] = a[i] * other;
        eq.b[i] = b[i];
        eq.c[i] = c[i] * other;
        eq.d[i] = d[i];
      }
      break;
    case Op::Div:
      if (first) {
        for (std::size_t i = 0; i < n; ++i) {
          eq.a[i] = a[i];
          eq.b[i] = b[i] * right[i];
          eq.c[i] = c[i];
          eq.d[i] = d[i] * right[i];
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          eq.a[i] = b[i];
          eq.b[i] = a[i] * left[i];
          eq.c[i] = d[i];
          eq.d[i] = c[i] * left[i];
        }
      }
      break;
  }
  eq.forbidden = parent.forbidden.for_child(op, side, left, right);
  return eq;
}

std::pair<NodeEquation, NodeEquation> derive_child_equations(const NodeEquation& parent, Op op,
                                                             std::span<const double> left,
                                                             std::span<const double> right) {
  return {derive_child_equation(parent, op, Side::First, left, right),
          derive_child_equation(parent, op, Side::Second, left, right)};
}

std::vector<NodeEquation> propagate_equations(const EvaluatedTree& tree,
                                              std::span<const double> targets) {
  const ExprTree& t = tree.tree();
  std::vector<NodeEquation> eqs(t.size());
  eqs[0] = root_equation(targets);
  // Pre-order guarantees a parent is finished before its children.
  for (NodeId id = 0; id < t.size(); ++id) {
    const Node& n = t.node(id);
    if (!n.is_operator()) continue;
    const NodeId l = t.left(id);
    const NodeId r = t.right(id);
    eqs[l] = derive_child_equation(eqs[id], n.op, Side::First, tree.semantics(l),
                                   tree.semantics(r));
    eqs[r] = derive_child_equation(eqs[id], n.op, Side::Second, tree.semantics(l),
                                   tree.semantics(r));
  }
  return eqs;
}

NodeEquation equation_at(const EvaluatedTree& tree, std::span<const double> targets, NodeId id) {
  const ExprTree& t = tree.tree();
  const std::vector<NodeId> path = t.path_from_root(id);
  NodeEquation eq = root_equation(targets);
  for (std::size_t k = 1; k < path.size(); ++k) {
    const NodeId parent = path[k - 1];
    const NodeId l = t.left(parent);
    const NodeId r = t.right(parent);
    eq = derive_child_equation(eq, t.node(parent).op, path[k] == l ? Side::First : Side::Second,
                               tree.semantics(l), tree.semantics(r));
  }
  return eq;
}

namespace {

template <typename OutputAt>
std::optional<double> evaluate_equation(const NodeEquation& eq, OutputAt output_at) {
  const std::size_t n = eq.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double o = output_at(i);
    const double den = eq.c[i] * o - eq.d[i];
    if (!(std::abs(den) >= kPoleGuard)) return std::nullopt;
    const double term = (eq.a[i] * o - eq.b[i]) / den;
    sum += term * term;
  }
  const double mse = sum / static_cast<double>(n);
  if (!std::isfinite(mse)) return std::nullopt;
  return mse;
}

}  // namespace

std::optional<double> equation_value(const NodeEquation& eq, std::span<const double> candidate) {
  return evaluate_equation(eq, [&](std::size_t i) { return candidate[i]; });
}

std::optional<double> equation_value_constant(const NodeEquation& eq, double k) {
  return evaluate_equation(eq, [k](std::size_t) { return k; });
}

std::optional<double> equation_mse(const NodeEquation& eq, std::span<const double> candidate) {
  if (!eq.forbidden.allows(candidate)) return std::nullopt;
  return equation_value(eq, candidate);
}

std::optional<double> equation_mse_constant(const NodeEquation& eq, double k) {
  if (!eq.forbidden.allows_constant(k)) return std::nullopt;
  return equation_value_constant(eq, k);
}

}  // namespace semreg
