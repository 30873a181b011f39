#include "semreg/constant_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/tools/minima.hpp>

namespace semreg {

std::string_view to_string(ConstantFitCase fit_case) {
  switch (fit_case) {
    case ConstantFitCase::ScaledMean: return "scaled_mean";
    case ConstantFitCase::WeightedMean: return "weighted_mean";
    case ConstantFitCase::LeastSquares: return "least_squares";
    case ConstantFitCase::WeightedLeastSquares: return "weighted_least_squares";
    case ConstantFitCase::Reciprocal: return "reciprocal";
    case ConstantFitCase::UniformDenominator: return "uniform_denominator";
    case ConstantFitCase::CandidateScan: return "candidate_scan";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sampled local minima worse than this multiple of the best sample are not
// polished.
constexpr double kPolishCutoff = 4.0;

// Outer samples at span * 10^j beyond the outermost breakpoints, for
// j = -kNearDecades .. kFarDecades - 1.
constexpr int kNearDecades = 3;
constexpr int kFarDecades = 7;

// Inside a gap between adjacent breakpoints, extra samples at
// g * kLadderStep^j from either end up to the midpoint, where g is the
// narrower neighbouring gap.
constexpr double kLadderStep = 10.0;

bool uniform(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

std::optional<ConstantFit> accept(const NodeEquation& eq, double k, ConstantFitCase fit_case) {
  if (!std::isfinite(k)) return std::nullopt;
  const auto mse = equation_mse_constant(eq, k);
  if (!mse) return std::nullopt;
  return ConstantFit{k, *mse, fit_case};
}

// c == 0 everywhere, d != 0 everywhere: ordinary weighted least squares.
std::optional<ConstantFit> fit_without_denominator(const NodeEquation& eq) {
  const std::size_t n = eq.size();
  const bool a_uniform = uniform(eq.a);
  const bool d_uniform = uniform(eq.d);
  double num = 0.0;
  double den = 0.0;
  ConstantFitCase fit_case;
  if (a_uniform && d_uniform) {
    for (double b : eq.b) num += b;
    den = eq.a.front() * static_cast<double>(n);
    fit_case = ConstantFitCase::ScaledMean;
  } else if (a_uniform) {
    for (std::size_t i = 0; i < n; ++i) {
      const double w = 1.0 / (eq.d[i] * eq.d[i]);
      num += eq.b[i] * w;
      den += w;
    }
    den *= eq.a.front();
    fit_case = ConstantFitCase::WeightedMean;
  } else if (d_uniform) {
    for (std::size_t i = 0; i < n; ++i) {
      num += eq.a[i] * eq.b[i];
      den += eq.a[i] * eq.a[i];
    }
    fit_case = ConstantFitCase::LeastSquares;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double w = 1.0 / (eq.d[i] * eq.d[i]);
      num += eq.a[i] * eq.b[i] * w;
      den += eq.a[i] * eq.a[i] * w;
    }
    fit_case = ConstantFitCase::WeightedLeastSquares;
  }
  if (den == 0.0) return std::nullopt;
  return accept(eq, num / den, fit_case);
}

// d == 0 everywhere, c != 0 everywhere: least squares in 1/k.
std::optional<ConstantFit> fit_reciprocal(const NodeEquation& eq) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    const double w = 1.0 / (eq.c[i] * eq.c[i]);
    num += eq.b[i] * eq.b[i] * w;
    den += eq.a[i] * eq.b[i] * w;
  }
  if (den == 0.0) return std::nullopt;
  return accept(eq, num / den, ConstantFitCase::Reciprocal);
}

// c = kc, d = kd, both nonzero constants. The single stationary point is the
// global minimum unless the numerator shares the pole; anything odd falls
// back to the scan.
std::optional<ConstantFit> fit_uniform_denominator(const NodeEquation& eq) {
  const double kc = eq.c.front();
  const double kd = eq.d.front();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    const double w = eq.b[i] * kc - eq.a[i] * kd;
    num += eq.b[i] * w;
    den += eq.a[i] * w;
  }
  if (den != 0.0) {
    if (auto fit = accept(eq, num / den, ConstantFitCase::UniformDenominator)) {
      const double h = 1e-7 * (1.0 + std::abs(fit->k));
      const auto lower = equation_value_constant(eq, fit->k - h);
      const auto upper = equation_value_constant(eq, fit->k + h);
      const bool local_min = (!lower || *lower >= fit->fitted_mse) &&
                             (!upper || *upper >= fit->fitted_mse);
      if (local_min) return fit;
    }
  }
  return scan_constant_candidates(eq);
}

double equation_or_inf(const NodeEquation& eq, double k) {
  return equation_value_constant(eq, k).value_or(kInf);
}

// equation_value_constant, except that it gives up and returns +inf as soon
// as the MSE is known to exceed `bound`.
double bounded_value(const NodeEquation& eq, double k, double bound) {
  const std::size_t n = eq.size();
  const double sum_bound = bound * static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double den = eq.c[i] * k - eq.d[i];
    if (!(std::abs(den) >= kPoleGuard)) return kInf;
    const double term = (eq.a[i] * k - eq.b[i]) / den;
    sum += term * term;
    if ((i & 31U) == 31U && sum > sum_bound) return kInf;
  }
  const double mse = sum / static_cast<double>(n);
  return std::isfinite(mse) && mse <= bound ? mse : kInf;
}

}  // namespace

std::optional<ConstantFit> scan_constant_candidates(const NodeEquation& eq) {
  const std::size_t n = eq.size();
  const ConstantScreen screen(eq.forbidden);
  std::vector<double> zeros;
  std::vector<double> poles;
  zeros.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (eq.a[i] != 0.0) {
      const double z = eq.b[i] / eq.a[i];
      if (std::isfinite(z)) zeros.push_back(z);
    }
    if (eq.c[i] != 0.0) {
      const double p = eq.d[i] / eq.c[i];
      if (std::isfinite(p)) poles.push_back(p);
    }
  }
  std::sort(poles.begin(), poles.end());
  poles.erase(std::unique(poles.begin(), poles.end()), poles.end());

  const auto near_pole = [&](double k) {
    const auto it = std::lower_bound(poles.begin(), poles.end(), k);
    const double tol = kPoleExclusion * (1.0 + std::abs(k));
    if (it != poles.end() && std::abs(*it - k) <= tol) return true;
    return it != poles.begin() && std::abs(*std::prev(it) - k) <= tol;
  };

  // Candidate points: the zero of every term, the midpoint and a few
  // near-end points of every gap between adjacent zeros/poles, and a few
  // far-field points.
  std::vector<double> breakpoints = zeros;
  breakpoints.insert(breakpoints.end(), poles.begin(), poles.end());
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<double> samples = zeros;
  double span = 1.0;
  for (double bp : breakpoints) span = std::max(span, std::abs(bp));
  const std::size_t gap_count = breakpoints.empty() ? 0 : breakpoints.size() - 1;
  const auto gap = [&](std::size_t i) { return breakpoints[i + 1] - breakpoints[i]; };
  for (std::size_t i = 0; i < gap_count; ++i) {
    const double lo = breakpoints[i];
    const double hi = breakpoints[i + 1];
    const double half = 0.5 * (hi - lo);
    samples.push_back(lo + half);
    double local = kInf;
    if (i > 0) local = gap(i - 1);
    if (i + 1 < gap_count) local = std::min(local, gap(i + 1));
    if (!std::isfinite(local)) local = half * 1e-3;
    for (double offset = local; offset > 0.0 && offset < half; offset *= kLadderStep) {
      samples.push_back(lo + offset);
      samples.push_back(hi - offset);
    }
  }
  const double low = breakpoints.empty() ? 0.0 : breakpoints.front();
  const double high = breakpoints.empty() ? 0.0 : breakpoints.back();
  double scale = span * std::pow(10.0, -kNearDecades);
  for (int j = -kNearDecades; j < kFarDecades; ++j, scale *= 10.0) {
    samples.push_back(low - scale);
    samples.push_back(high + scale);
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  samples.erase(std::remove_if(samples.begin(), samples.end(),
                               [](double k) { return !std::isfinite(k); }),
                samples.end());
  if (samples.empty()) return std::nullopt;

  // Samples above kPolishCutoff times the running best can be neither the
  // best nor polished, so their evaluation may stop early. A strided first
  // sweep finds a good bound quickly.
  const std::size_t m = samples.size();
  std::vector<double> values(m, kInf);
  double best_value = kInf;
  const auto evaluate = [&](std::size_t j) {
    const double k = samples[j];
    if (!screen.allows(k) || near_pole(k)) return;
    values[j] = bounded_value(eq, k, kPolishCutoff * best_value);
    best_value = std::min(best_value, values[j]);
  };
  constexpr std::size_t kStride = 16;
  for (std::size_t j = 0; j < m; j += kStride) evaluate(j);
  for (std::size_t j = 0; j < m; ++j) {
    if (j % kStride != 0) evaluate(j);
  }

  // adjacent[j]: no pole strictly between samples j and j+1.
  std::vector<bool> adjacent(m, false);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const auto it = std::upper_bound(poles.begin(), poles.end(), samples[j]);
    adjacent[j] = it == poles.end() || *it >= samples[j + 1];
  }

  std::size_t best = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (values[j] < values[best]) best = j;
  }
  if (!std::isfinite(values[best])) return std::nullopt;
  ConstantFit fit{samples[best], values[best], ConstantFitCase::CandidateScan};
  if (fit.fitted_mse == 0.0) return fit;

  // Polish every promising sampled local minimum inside its bracket.
  const double cutoff = kPolishCutoff * fit.fitted_mse;
  for (std::size_t j = 0; j < m; ++j) {
    if (!(values[j] <= cutoff)) continue;
    const bool has_left = j > 0 && adjacent[j - 1];
    const bool has_right = j + 1 < m && adjacent[j];
    if (has_left && values[j - 1] < values[j]) continue;
    if (has_right && values[j + 1] < values[j]) continue;

    const double k = samples[j];
    double lo;
    double hi;
    if (has_left) {
      lo = samples[j - 1];
    } else {
      const auto it = std::lower_bound(poles.begin(), poles.end(), k);
      lo = it != poles.begin() ? *std::prev(it) : k - 10.0 * scale;
    }
    if (has_right) {
      hi = samples[j + 1];
    } else {
      const auto it = std::upper_bound(poles.begin(), poles.end(), k);
      hi = it != poles.end() ? *it : k + 10.0 * scale;
    }
    std::uintmax_t max_iter = 100;
    const auto [x, fx] = boost::math::tools::brent_find_minima(
        [&](double t) { return equation_or_inf(eq, t); }, lo, hi,
        std::numeric_limits<double>::digits / 2, max_iter);
    if (!(fx < fit.fitted_mse) || near_pole(x) || !screen.allows(x)) continue;
    if (const auto mse = equation_value_constant(eq, x); mse && *mse < fit.fitted_mse) {
      fit.k = x;
      fit.fitted_mse = *mse;
    }
  }
  return fit;
}

std::optional<ConstantFit> minimize_constant(const NodeEquation& eq) {
  if (eq.size() == 0 || eq.forbidden.is_all_forbidden()) return std::nullopt;
  const std::size_t n = eq.size();

  if (all_zero(eq.c)) {
    if (all_zero(eq.a)) return std::nullopt;  // constant function
    if (std::any_of(eq.d.begin(), eq.d.end(), [](double d) { return d == 0.0; })) {
      return std::nullopt;
    }
    return fit_without_denominator(eq);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (eq.c[i] == 0.0 && eq.d[i] == 0.0) return std::nullopt;  // undefined term
  }
  const bool c_nonzero =
      std::none_of(eq.c.begin(), eq.c.end(), [](double c) { return c == 0.0; });
  if (c_nonzero && all_zero(eq.d)) return fit_reciprocal(eq);
  if (uniform(eq.c) && uniform(eq.d) && eq.d.front() != 0.0) {
    return fit_uniform_denominator(eq);
  }
  return scan_constant_candidates(eq);
}

}  // namespace semreg
