#include "semreg/grid.hpp"

#include <algorithm>

#include "semreg/errors.hpp"

namespace semreg {

GridSpec::GridSpec() {
  for (std::size_t n = 5; n <= 200; n += 5) max_nodes.push_back(n);
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& v, const char* axis) {
  if (v.empty()) throw InvalidHyperparameters(std::string("grid axis '") + axis + "' is empty");
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void GridSpec::normalize() {
  sort_unique(strategies, "strategy");
  sort_unique(min_improvements, "min_improvement");
  sort_unique(max_nodes, "max_nodes");
}

std::size_t GridSpec::cell_count() const {
  return strategies.size() * min_improvements.size() * max_nodes.size();
}

GridReport run_grid(const Dataset& data, std::size_t k, GridSpec spec, const Hyperparameters& base,
                    const GridProgress& progress) {
  spec.normalize();
  // Fail early on a split that no cell could use.
  kfold_split(data.num_patterns(), k);
  GridReport report;
  report.cells.reserve(spec.cell_count());
  const std::size_t total = spec.cell_count();
  for (const int strategy : spec.strategies) {
    for (const double improvement : spec.min_improvements) {
      for (const std::size_t nodes : spec.max_nodes) {
        GridCell cell;
        cell.strategy = strategy;
        cell.min_improvement = improvement;
        cell.max_nodes = nodes;
        try {
          Hyperparameters hp = base;
          hp.strategy = strategy;
          hp.min_improvement = improvement;
          hp.max_nodes = nodes;
          cell.result = cross_validate(data, k, hp);
        } catch (const std::exception& e) {
          cell.error = e.what();
        }
        report.cells.push_back(std::move(cell));
        if (progress) progress(report.cells.back(), report.cells.size() - 1, total);
      }
    }
  }
  return report;
}

std::vector<GridBest> best_cells(const GridReport& report) {
  std::vector<GridBest> out;
  for (const auto& cell : report.cells) {
    if (out.empty() || out.back().strategy != cell.strategy) out.push_back({cell.strategy});
    if (!cell.result) continue;
    GridBest& best = out.back();
    const CvSummary& s = cell.result->summary;
    if (!best.best_train || s.mean_train_mse < best.best_train->result->summary.mean_train_mse) {
      best.best_train = &cell;
    }
    if (s.mean_test_mse && (!best.best_test || *s.mean_test_mse <
                                                   *best.best_test->result->summary.mean_test_mse)) {
      best.best_test = &cell;
    }
  }
  return out;
}

}  // namespace semreg
