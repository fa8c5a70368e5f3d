#include "weakmult/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weakmult/power_law.hpp"

namespace weakmult {

namespace {

void check(double r, double n) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw std::invalid_argument("envelope: r must be a finite value >= 1");
  if (!(n > 0.0)) throw std::invalid_argument("envelope: n must be positive");
}

// int_0^inf t^{r-1} exp(-a t^2) dt = Gamma(r/2) / (2 a^{r/2}), a = r / (2n).
double gaussian_moment(double r, double n) {
  return 0.5 * std::tgamma(0.5 * r) * std::pow(2.0 * n / r, 0.5 * r);
}

}  // namespace

double envelope_value(double r, double n) {
  check(r, n);
  return gaussian_moment(r, n) / std::sqrt(n);
}

double envelope_value_rth_power(double r, double n) {
  check(r, n);
  return std::pow(std::pow(n, -0.5 * r) * gaussian_moment(r, n), 1.0 / r);
}

double envelope_exponent(double r, std::span<const double> n_values) {
  if (n_values.size() < 3) throw std::invalid_argument("envelope_exponent: need at least 3 n values");
  const auto [lo, hi] = std::minmax_element(n_values.begin(), n_values.end());
  if (!(*lo > 0.0) || *hi / *lo < 100.0) {
    throw std::invalid_argument("envelope_exponent: n values must span at least two decades");
  }
  std::vector<std::pair<double, double>> points;
  for (double n : n_values) points.emplace_back(n, envelope_value(r, n));
  return fit_power_law(points).slope;
}

}  // namespace weakmult
