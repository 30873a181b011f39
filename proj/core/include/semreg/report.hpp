#pragma once

#include <filesystem>
#include <string>

#include "semreg/cross_validation.hpp"
#include "semreg/engine.hpp"
#include "semreg/grid.hpp"

namespace semreg {

// Report tables are tab-separated with a header row. Reals use 17
// significant digits; an undefined test MSE is written as "undefined" in
// tables and null in JSON. Wall-clock times live only in the *_timing
// tables and the summary text, so every other file is reproducible byte for
// byte.

/// Human-readable fit summary.
std::string fit_summary_text(const FitReport& report, const Hyperparameters& hp);
/// iteration, step, node_id, node_count, height, mse, expression
std::string trace_tsv(const FitReport& report);
/// Final expression, MSE, stop reason, hyperparameters and trace.
std::string fit_json(const FitReport& report, const Hyperparameters& hp);

/// fold, train_mse, test_mse, node_count, height, iterations, stop_reason,
/// expression; then rows "mean", "std" and "median".
std::string cv_folds_tsv(const CvResult& result);
/// fold, seconds; then "total".
std::string cv_timing_tsv(const CvResult& result);
std::string cv_summary_text(const CvResult& result);
std::string cv_json(const CvResult& result, std::size_t k, const Hyperparameters& hp);

/// strategy, min_improvement, max_nodes, metric, value. One row per cell and
/// metric: mean_train_mse, std_train_mse, mean_test_mse, std_test_mse,
/// median_test_mse, mean_node_count, mean_height, undefined_test_folds.
/// A failed cell has value "error" for every metric.
std::string grid_long_tsv(const GridReport& report);
/// strategy, min_improvement, max_nodes, mean_seconds
std::string grid_timing_tsv(const GridReport& report);
/// strategy, selection, min_improvement, max_nodes, mean_train_mse,
/// std_train_mse, mean_test_mse, std_test_mse, median_test_mse
std::string grid_best_tsv(const GridReport& report);
/// strategy, min_improvement, max_nodes, error (failed cells only)
std::string grid_errors_tsv(const GridReport& report);

/// Writes `content` to `path`, creating parent directories. Throws Error.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace semreg
