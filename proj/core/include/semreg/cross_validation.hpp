#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semreg/dataset.hpp"
#include "semreg/engine.hpp"
#include "semreg/expr_tree.hpp"

namespace semreg {

/// Pattern i belongs to test fold i mod k.
struct FoldSplit {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/// Throws KTooLarge when k > n, InvalidHyperparameters when k < 2.
FoldSplit kfold_split(std::size_t n, std::size_t k);

struct FoldEvaluation {
  double train_mse = 0.0;
  /// nullopt when the tree divides by zero or overflows on a test pattern.
  std::optional<double> test_mse;
};

/// Train and test MSE of `tree`. The tree must be valid on `train`.
FoldEvaluation evaluate_fold(const ExprTree& tree, const Dataset& train, const Dataset& test);

struct FoldResult {
  std::size_t fold = 0;
  double train_mse = 0.0;
  std::optional<double> test_mse;
  std::string expression;
  std::size_t node_count = 0;
  std::size_t height = 0;
  std::size_t iterations = 0;
  StopReason stop_reason = StopReason::NoImprovement;
  double seconds = 0.0;
  /// Empty unless cross_validate was asked to keep traces.
  std::vector<TraceEntry> trace;
};

/// Aggregates over folds. Test statistics cover folds with a defined test
/// MSE only; standard deviations use the n-1 denominator and are 0 for a
/// single value.
struct CvSummary {
  double mean_train_mse = 0.0;
  double std_train_mse = 0.0;
  std::optional<double> mean_test_mse;
  std::optional<double> std_test_mse;
  std::optional<double> median_test_mse;
  std::size_t undefined_test_folds = 0;
  double mean_node_count = 0.0;
  double mean_height = 0.0;
  double mean_seconds = 0.0;
  double total_seconds = 0.0;
};

struct CvResult {
  std::vector<FoldResult> folds;
  CvSummary summary;
};

CvSummary summarize(const std::vector<FoldResult>& folds);

/// Fits every fold of kfold_split(N, k) with `hp`, in fold order.
CvResult cross_validate(const Dataset& data, std::size_t k, const Hyperparameters& hp,
                        bool keep_traces = false);

double mean(const std::vector<double>& values);
/// Sample standard deviation; 0 for fewer than two values.
double sample_std(const std::vector<double>& values);
/// Mean of the two middle values for even counts. Empty input is an error.
double median(std::vector<double> values);

}  // namespace semreg
