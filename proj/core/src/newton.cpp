#include "semreg/newton.hpp"

#include <random>
#include <vector>

namespace semreg {

namespace {

double uniform(std::mt19937_64& rng, double low, double high) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return low + (high - low) * u;
}

}  // namespace

Dataset generate_newton_dataset(std::uint64_t seed, std::size_t patterns) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> x(3, std::vector<double>(patterns));
  std::vector<double> targets(patterns);
  for (std::size_t i = 0; i < patterns; ++i) {
    x[0][i] = uniform(rng, 1e23, 1e25);
    x[1][i] = uniform(rng, 1e23, 1e25);
    x[2][i] = uniform(rng, 1e8, 1e12);
    targets[i] = kGravitationalConstant * x[0][i] * x[1][i] / (x[2][i] * x[2][i]);
  }
  return Dataset(std::move(x), std::move(targets));
}

}  // namespace semreg
