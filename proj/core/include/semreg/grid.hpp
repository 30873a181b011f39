#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semreg/cross_validation.hpp"
#include "semreg/engine.hpp"

namespace semreg {

struct GridSpec {
  std::vector<int> strategies{1, 2, 3, 4};
  std::vector<double> min_improvements{1e-1, 1e-2, 1e-3, 1e-4, 1e-5,
                                       1e-6, 1e-7, 1e-8, 1e-9, 1e-10};
  std::vector<std::size_t> max_nodes;  // default 5, 10, ..., 200

  GridSpec();

  /// Sorts ascending and drops duplicates. Throws InvalidHyperparameters on
  /// an empty axis.
  void normalize();
  std::size_t cell_count() const;
};

struct GridCell {
  int strategy = 1;
  double min_improvement = 0.0;
  std::size_t max_nodes = 0;
  std::optional<CvResult> result;
  /// Set when the cell could not be evaluated.
  std::string error;
};

struct GridReport {
  std::vector<GridCell> cells;  // strategy, min_improvement, max_nodes order
};

/// Called after each cell with its position and total.
using GridProgress = std::function<void(const GridCell&, std::size_t index, std::size_t total)>;

/// Cross-validates every cell. `base` supplies the settings that are not
/// grid axes. A cell that throws is recorded with its message and the run
/// continues.
GridReport run_grid(const Dataset& data, std::size_t k, GridSpec spec, const Hyperparameters& base,
                    const GridProgress& progress = {});

/// Per-strategy cell with the lowest mean train MSE and the one with the
/// lowest mean test MSE. Ties go to the earlier cell.
struct GridBest {
  int strategy = 1;
  const GridCell* best_train = nullptr;
  const GridCell* best_test = nullptr;
};
std::vector<GridBest> best_cells(const GridReport& report);

}  // namespace semreg
