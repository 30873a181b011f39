#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace semreg {

/// Training data in the semantic-space layout: one row per variable, one
/// column per pattern. Every stored value is finite.
class Dataset {
 public:
  /// `variables` is L rows of N values each. Empty `names` defaults to
  /// x1..xL. Throws InvalidDataset / EmptyDataset on shape or finiteness
  /// violations.
  Dataset(std::vector<std::vector<double>> variables, std::vector<double> targets,
          std::vector<std::string> names = {});

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_patterns() const { return targets_.size(); }

  std::span<const double> variable(std::size_t index) const { return variables_.at(index); }
  std::span<const double> targets() const { return targets_; }
  const std::vector<std::string>& variable_names() const { return names_; }

  /// True when every pattern holds the same value for this variable.
  bool is_constant_variable(std::size_t index) const;
  /// True when some pattern holds exactly 0 for this variable.
  bool variable_has_zero(std::size_t index) const;

  /// Subset of patterns, in the given order.
  Dataset select(std::span<const std::size_t> patterns) const;

  double target_mean() const;

 private:
  std::vector<std::vector<double>> variables_;
  std::vector<double> targets_;
  std::vector<std::string> names_;
};

std::vector<std::string> default_variable_names(std::size_t count);

}  // namespace semreg
