#include "semreg/cross_validation.hpp"

#include <algorithm>
#include <cmath>

#include "semreg/errors.hpp"

namespace semreg {

std::vector<std::size_t> FoldSplit::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldSplit::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldSplit kfold_split(std::size_t n, std::size_t k) {
  if (k < 2) throw InvalidHyperparameters("k must be at least 2");
  if (k > n) throw KTooLarge(k, n);
  FoldSplit split;
  split.k = k;
  split.assignments.resize(n);
  for (std::size_t i = 0; i < n; ++i) split.assignments[i] = i % k;
  return split;
}

FoldEvaluation evaluate_fold(const ExprTree& tree, const Dataset& train, const Dataset& test) {
  FoldEvaluation out;
  out.train_mse = mean_squared_error(evaluate_root(tree, train), train.targets());
  try {
    const double mse = mean_squared_error(evaluate_root(tree, test), test.targets());
    if (std::isfinite(mse)) out.test_mse = mse;
  } catch (const DivisionByZero&) {
  } catch (const NonFiniteResult&) {
  }
  return out;
}

double mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double sum = 0.0;
  for (double v : values) sum += (v - m) * (v - m);
  return std::sqrt(sum / static_cast<double>(values.size() - 1));
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

CvSummary summarize(const std::vector<FoldResult>& folds) {
  CvSummary s;
  std::vector<double> train;
  std::vector<double> test;
  std::vector<double> nodes;
  std::vector<double> heights;
  std::vector<double> seconds;
  for (const auto& f : folds) {
    train.push_back(f.train_mse);
    if (f.test_mse) {
      test.push_back(*f.test_mse);
    } else {
      ++s.undefined_test_folds;
    }
    nodes.push_back(static_cast<double>(f.node_count));
    heights.push_back(static_cast<double>(f.height));
    seconds.push_back(f.seconds);
  }
  s.mean_train_mse = mean(train);
  s.std_train_mse = sample_std(train);
  if (!test.empty()) {
    s.mean_test_mse = mean(test);
    s.std_test_mse = sample_std(test);
    s.median_test_mse = median(test);
  }
  s.mean_node_count = mean(nodes);
  s.mean_height = mean(heights);
  s.mean_seconds = mean(seconds);
  for (double t : seconds) s.total_seconds += t;
  return s;
}

CvResult cross_validate(const Dataset& data, std::size_t k, const Hyperparameters& hp,
                        bool keep_traces) {
  hp.validate();
  const FoldSplit split = kfold_split(data.num_patterns(), k);
  CvResult result;
  for (std::size_t fold = 0; fold < k; ++fold) {
    const auto train_idx = split.train_indices(fold);
    const auto test_idx = split.test_indices(fold);
    const Dataset train = data.select(train_idx);
    const Dataset test = data.select(test_idx);
    const FitReport report = fit(train, hp);
    const FoldEvaluation eval = evaluate_fold(report.tree, train, test);
    const TreeMetrics metrics = tree_metrics(report.tree);
    FoldResult row;
    row.fold = fold;
    row.train_mse = report.train_mse;
    row.test_mse = eval.test_mse;
    row.expression = report.expression;
    row.node_count = metrics.node_count;
    row.height = metrics.height;
    row.iterations = report.iterations;
    row.stop_reason = report.stop_reason;
    row.seconds = report.seconds;
    if (keep_traces) row.trace = report.trace;
    result.folds.push_back(std::move(row));
  }
  result.summary = summarize(result.folds);
  return result;
}

}  // namespace semreg
