#pragma once

#include <span>
#include <utility>

namespace weakmult {

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Coefficient of determination of the log-log regression (1 for a perfect
  /// or constant fit).
  double goodness = 0.0;
};

/// Ordinary least squares of log(value) on log(n). Needs >= 3 points, all positive.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

}  // namespace weakmult
