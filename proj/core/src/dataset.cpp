#include "semreg/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "semreg/errors.hpp"

namespace semreg {

std::vector<std::string> default_variable_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

Dataset::Dataset(std::vector<std::vector<double>> variables, std::vector<double> targets,
                 std::vector<std::string> names)
    : variables_(std::move(variables)), targets_(std::move(targets)), names_(std::move(names)) {
  if (targets_.empty()) throw EmptyDataset();
  if (variables_.empty()) throw InvalidDataset("dataset has no variables");
  for (const auto& row : variables_) {
    if (row.size() != targets_.size()) {
      throw InvalidDataset("variable row length " + std::to_string(row.size()) +
                           " does not match " + std::to_string(targets_.size()) + " targets");
    }
    if (!std::all_of(row.begin(), row.end(), [](double v) { return std::isfinite(v); })) {
      throw InvalidDataset("non-finite variable value");
    }
  }
  if (!std::all_of(targets_.begin(), targets_.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidDataset("non-finite target value");
  }
  if (names_.empty()) names_ = default_variable_names(variables_.size());
  if (names_.size() != variables_.size()) {
    throw InvalidDataset("expected " + std::to_string(variables_.size()) + " variable names");
  }
}

bool Dataset::is_constant_variable(std::size_t index) const {
  const auto& row = variables_.at(index);
  return std::all_of(row.begin(), row.end(), [&](double v) { return v == row.front(); });
}

bool Dataset::variable_has_zero(std::size_t index) const {
  const auto& row = variables_.at(index);
  return std::any_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
}

Dataset Dataset::select(std::span<const std::size_t> patterns) const {
  std::vector<std::vector<double>> vars(variables_.size());
  std::vector<double> targets;
  targets.reserve(patterns.size());
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    vars[v].reserve(patterns.size());
    for (std::size_t p : patterns) vars[v].push_back(variables_[v].at(p));
  }
  for (std::size_t p : patterns) targets.push_back(targets_.at(p));
  return Dataset(std::move(vars), std::move(targets), names_);
}

double Dataset::target_mean() const {
  return std::accumulate(targets_.begin(), targets_.end(), 0.0) /
         static_cast<double>(targets_.size());
}

}  // namespace semreg
