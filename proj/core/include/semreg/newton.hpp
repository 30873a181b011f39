#pragma once

#include <cstdint>

#include "semreg/dataset.hpp"

namespace semreg {

inline constexpr double kGravitationalConstant = 6.67392e-11;

/// Synthetic gravitation data: x1, x2 uniform in [1e23, 1e25], x3 uniform in
/// [1e8, 1e12], target G * x1 * x2 / x3^2. Draws come from std::mt19937_64
/// seeded with `seed`, mapped to [0, 1) as (draw >> 11) * 2^-53, in the order
/// x1, x2, x3 per pattern, so output is identical on every platform.
Dataset generate_newton_dataset(std::uint64_t seed, std::size_t patterns);

}  // namespace semreg
