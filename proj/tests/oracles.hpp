#pragma once

// Slow reference computations used as expected values. None of them goes
// through the FFT, the sorting rearrangement or the closed-form step formulas.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "weakmult/grid.hpp"
#include "weakmult/rng.hpp"
#include "weakmult/sphere.hpp"

namespace oracle {

using weakmult::Complex;
using weakmult::SampledFunction;
using weakmult::UniformGrid;

// h sum_j f(x_j) exp(-2 pi i x_j xi), 1-D.
inline Complex direct_ft(const SampledFunction& f, double xi, double sign = -1.0) {
  const UniformGrid& g = f.grid();
  Complex total{};
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double phase = sign * 2.0 * std::numbers::pi * g.coordinate(j) * xi;
    total += f[j] * Complex(std::cos(phase), std::sin(phase));
  }
  return total * g.spacing();
}

// h sum_j f(x_j) g(x_i - x_j) with periodic wrap, 1-D.
inline Complex direct_convolution(const SampledFunction& f, const SampledFunction& g, std::size_t i) {
  const std::size_t n = f.size();
  const std::size_t half = n / 2;
  Complex total{};
  for (std::size_t j = 0; j < n; ++j) {
    // x_i - x_j = (i - j) h, which is grid index (i - j + N/2) mod N.
    const std::size_t k = (i + n + half - j) % n;
    total += f[j] * g[k];
  }
  return total * f.grid().spacing();
}

// |{|f| > alpha}| by counting cells.
inline double level_set_measure(const SampledFunction& f, double alpha) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.size(); ++i) count += std::abs(f[i]) > alpha ? 1 : 0;
  return static_cast<double>(count) * f.grid().cell_measure();
}

// f*(t) = inf{alpha >= 0 : |{|f| > alpha}| <= t}, searched over the sample magnitudes.
class DecreasingRearrangement {
 public:
  explicit DecreasingRearrangement(const SampledFunction& f) {
    candidates_.push_back(0.0);
    for (std::size_t i = 0; i < f.size(); ++i) candidates_.push_back(std::abs(f[i]));
    for (double a : candidates_) measures_.push_back(level_set_measure(f, a));
  }
  double operator()(double t) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (measures_[i] <= t && candidates_[i] < best) best = candidates_[i];
    }
    return best;
  }

 private:
  std::vector<double> candidates_;
  std::vector<double> measures_;
};

// (int_0^T (t^{1/p} f*(t))^r dt/t)^{1/r} by Gauss-Legendre on each cell
// [k h, (k+1) h), with the first cell split into geometric panels.
inline double lorentz_by_quadrature(const SampledFunction& f, double p, double r) {
  const DecreasingRearrangement fstar(f);
  const double h = f.grid().cell_measure();
  const double total = h * static_cast<double>(f.size());
  const auto rule = weakmult::gauss_legendre(20);
  auto panel = [&](double a, double b, double value) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[i];
      s += rule.weights[i] * std::pow(t, r / p - 1.0);
    }
    return 0.5 * (b - a) * s * std::pow(value, r);
  };
  double sum = 0.0;
  const double first = fstar(0.5 * h);
  double hi = h;
  for (int k = 0; k < 120; ++k) {
    sum += panel(0.5 * hi, hi, first);
    hi *= 0.5;
  }
  for (double a = h; a < total - 0.5 * h; a += h) sum += panel(a, a + h, fstar(a + 0.5 * h));
  return std::pow(sum, 1.0 / r);
}

// Random step function on a grid: real or complex values, optionally drawn from
// a few levels so that ties occur, optionally with zero cells.
inline SampledFunction random_step_function(const UniformGrid& grid, weakmult::Rng& rng) {
  const bool complex_values = rng.uniform() < 0.5;
  const bool tied = rng.uniform() < 0.3;
  const double zero_fraction = rng.uniform(0.0, 0.5);
  std::vector<Complex> v(grid.size());
  for (auto& x : v) {
    if (rng.uniform() < zero_fraction) continue;
    double re = tied ? static_cast<double>(rng.integer(1, 4)) : rng.uniform(-3.0, 3.0);
    double im = complex_values && !tied ? rng.uniform(-3.0, 3.0) : 0.0;
    x = Complex(re, im);
  }
  return SampledFunction(grid, std::move(v));
}

}  // namespace oracle
