#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "semreg/node_equation.hpp"

namespace semreg {

/// Which branch of the constant minimizer produced the fit.
enum class ConstantFitCase : std::uint8_t {
  ScaledMean,          // c = 0, a and d uniform: k = sum(b) / (a * N)
  WeightedMean,        // c = 0, a uniform: k = (1/a) sum(b/d^2) / sum(1/d^2)
  LeastSquares,        // c = 0, d uniform: k = sum(a b) / sum(a^2)
  WeightedLeastSquares,// c = 0: k = sum(a b / d^2) / sum(a^2 / d^2)
  Reciprocal,          // d = 0, c != 0: k = sum(b^2/c^2) / sum(a b / c^2)
  UniformDenominator,  // c, d uniform and nonzero: single stationary point
  CandidateScan,       // general case: zero-candidate scan plus local polish
};

std::string_view to_string(ConstantFitCase fit_case);

struct ConstantFit {
  double k = 0.0;
  double fitted_mse = 0.0;
  ConstantFitCase case_used = ConstantFitCase::CandidateScan;
};

/// Relative distance below which a scan candidate counts as sitting on a
/// pole d_i / c_i of the equation.
inline constexpr double kPoleExclusion = 1e-9;

/// Constant k minimizing equation_mse(eq, (k, ..., k)). nullopt when the
/// equation has no minimum, every candidate is forbidden, or the minimizer
/// lands on a forbidden value or a pole.
std::optional<ConstantFit> minimize_constant(const NodeEquation& eq);

/// The general-case path on its own, regardless of the coefficient shape.
std::optional<ConstantFit> scan_constant_candidates(const NodeEquation& eq);

}  // namespace semreg
