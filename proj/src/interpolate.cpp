#include "weakmult/interpolate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace weakmult {

namespace {

struct Stencil {
  std::size_t first;
  std::array<double, 4> weights;
};

Stencil stencil(const UniformGrid& grid, double x) {
  const std::size_t n = grid.points_per_axis();
  const double u = (x - grid.coordinate(0)) / grid.spacing();
  if (!(u >= 0.0) || u > static_cast<double>(n - 1)) {
    throw std::out_of_range("interpolation point outside the grid");
  }
  const auto cell = static_cast<std::size_t>(std::floor(u));
  const std::size_t first = std::min(cell == 0 ? 0 : cell - 1, n - 4);
  const double t = u - static_cast<double>(first);  // stencil nodes sit at t = 0, 1, 2, 3
  Stencil s{first, {}};
  for (int i = 0; i < 4; ++i) {
    double w = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) w *= (t - j) / static_cast<double>(i - j);
    }
    s.weights[static_cast<std::size_t>(i)] = w;
  }
  return s;
}

}  // namespace

Complex interpolate_cubic(const SampledFunction& f, std::span<const double> x) {
  const UniformGrid& grid = f.grid();
  if (x.size() < static_cast<std::size_t>(grid.dimension())) {
    throw std::invalid_argument("interpolation point has too few coordinates");
  }
  const Stencil sx = stencil(grid, x[0]);
  if (grid.dimension() == 1) {
    Complex v{};
    for (std::size_t i = 0; i < 4; ++i) v += sx.weights[i] * f[sx.first + i];
    return v;
  }
  const std::size_t n = grid.points_per_axis();
  const Stencil sy = stencil(grid, x[1]);
  Complex v{};
  for (std::size_t i = 0; i < 4; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < 4; ++j) row += sy.weights[j] * f[(sx.first + i) * n + sy.first + j];
    v += sx.weights[i] * row;
  }
  return v;
}

}  // namespace weakmult
