#include "semreg/search.hpp"

#include <tuple>

namespace semreg {

std::string_view to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::Constant: return "constant";
    case SearchKind::Variable: return "variable";
    case SearchKind::ConstantVariable: return "constant_variable";
    case SearchKind::ConstantExpression: return "constant_expression";
  }
  return "unknown";
}

bool ranks_before(const SearchOutcome& lhs, const SearchOutcome& rhs) {
  if (lhs.predicted_reduction != rhs.predicted_reduction) {
    return lhs.predicted_reduction > rhs.predicted_reduction;
  }
  return std::tuple(lhs.kind, lhs.node_id, lhs.variable, lhs.op) <
         std::tuple(rhs.kind, rhs.node_id, rhs.variable, rhs.op);
}

SearchContext::SearchContext(const Dataset& data, double current_mse, double min_improvement)
    : data_(&data),
      current_mse_(current_mse),
      min_reduction_(current_mse * min_improvement),
      usable_(data.num_variables()),
      divisor_(data.num_variables()) {
  for (std::size_t v = 0; v < data.num_variables(); ++v) {
    usable_[v] = !data.is_constant_variable(v);
    divisor_[v] = usable_[v] && !data.variable_has_zero(v);
  }
}

std::optional<double> SearchContext::reduction_for(double fitted_mse) const {
  const double reduction = current_mse_ - fitted_mse;
  if (!(reduction > 0.0) || !(reduction > min_reduction_)) return std::nullopt;
  return reduction;
}

namespace {

void keep_better(std::optional<SearchOutcome>& best, SearchOutcome candidate) {
  if (!best || ranks_before(candidate, *best)) best = std::move(candidate);
}

}  // namespace

std::optional<SearchOutcome> constant_search(const SearchContext& ctx, const EvaluatedTree&,
                                             NodeId id, const NodeEquation& eq) {
  const auto fit = minimize_constant(eq);
  if (!fit) return std::nullopt;
  const auto reduction = ctx.reduction_for(fit->fitted_mse);
  if (!reduction) return std::nullopt;
  SearchOutcome out;
  out.node_id = id;
  out.replacement = ExprTree::constant(fit->k);
  out.predicted_mse = fit->fitted_mse;
  out.predicted_reduction = *reduction;
  out.kind = SearchKind::Constant;
  return out;
}

std::optional<SearchOutcome> variable_search(const SearchContext& ctx, const EvaluatedTree& tree,
                                             NodeId id, const NodeEquation& eq) {
  if (eq.forbidden.is_all_forbidden()) return std::nullopt;
  const Node& node = tree.tree().node(id);
  std::optional<SearchOutcome> best;
  for (std::size_t v = 0; v < ctx.data().num_variables(); ++v) {
    if (!ctx.usable(v)) continue;
    if (node.is_variable() && node.variable == v) continue;
    const auto mse = equation_mse(eq, ctx.data().variable(v));
    if (!mse) continue;
    const auto reduction = ctx.reduction_for(*mse);
    if (!reduction) continue;
    SearchOutcome out;
    out.node_id = id;
    out.replacement = ExprTree::variable(v);
    out.predicted_mse = *mse;
    out.predicted_reduction = *reduction;
    out.kind = SearchKind::Variable;
    out.variable = v;
    keep_better(best, std::move(out));
  }
  return best;
}

std::optional<SearchOutcome> constant_variable_search(const SearchContext& ctx,
                                                      const EvaluatedTree& tree, NodeId id,
                                                      const NodeEquation& eq) {
  if (eq.forbidden.is_all_forbidden()) return std::nullopt;
  const ExprTree& t = tree.tree();
  const Node& node = t.node(id);
  // (op, Constant, Variable v) already covers every constant for this op/v.
  std::optional<std::pair<Op, std::size_t>> hidden;
  if (node.is_operator() && t.node(t.left(id)).is_constant() &&
      t.node(t.right(id)).is_variable()) {
    hidden = std::pair(node.op, t.node(t.right(id)).variable);
  }

  std::optional<SearchOutcome> best;
  for (std::size_t v = 0; v < ctx.data().num_variables(); ++v) {
    if (!ctx.usable(v)) continue;
    const auto row = ctx.data().variable(v);
    for (const Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div}) {
      if (op == Op::Div && !ctx.usable_divisor(v)) continue;
      if (hidden && hidden->first == op && hidden->second == v) continue;
      // The constant is the first child, the variable its sibling.
      const NodeEquation child = derive_child_equation(eq, op, Side::First, row, row);
      const auto fit = minimize_constant(child);
      if (!fit) continue;
      const auto reduction = ctx.reduction_for(fit->fitted_mse);
      if (!reduction) continue;
      SearchOutcome out;
      out.node_id = id;
      out.replacement =
          ExprTree::binary(op, ExprTree::constant(fit->k), ExprTree::variable(v));
      out.predicted_mse = fit->fitted_mse;
      out.predicted_reduction = *reduction;
      out.kind = SearchKind::ConstantVariable;
      out.variable = v;
      out.op = op;
      keep_better(best, std::move(out));
    }
  }
  return best;
}

std::optional<SearchOutcome> constant_expression_search(const SearchContext& ctx,
                                                        const EvaluatedTree& tree, NodeId id,
                                                        const NodeEquation& eq) {
  const ExprTree& t = tree.tree();
  const Node& node = t.node(id);
  if (!node.is_operator() || eq.forbidden.is_all_forbidden()) return std::nullopt;
  const bool constant_child =
      t.node(t.left(id)).is_constant() || t.node(t.right(id)).is_constant();
  const bool additive = node.op == Op::Add || node.op == Op::Sub;

  const auto& p = tree.semantics(id);
  std::optional<SearchOutcome> best;
  for (const Op op : {Op::Add, Op::Mul}) {
    if (constant_child && additive == (op == Op::Add)) continue;
    const NodeEquation child = derive_child_equation(eq, op, Side::First, p, p);
    const auto fit = minimize_constant(child);
    if (!fit) continue;
    const auto reduction = ctx.reduction_for(fit->fitted_mse);
    if (!reduction) continue;
    SearchOutcome out;
    out.node_id = id;
    out.replacement = ExprTree::binary(op, ExprTree::constant(fit->k), t.subtree(id));
    out.predicted_mse = fit->fitted_mse;
    out.predicted_reduction = *reduction;
    out.kind = SearchKind::ConstantExpression;
    out.op = op;
    keep_better(best, std::move(out));
  }
  return best;
}

}  // namespace semreg
