#pragma once

#include <span>

#include "weakmult/grid.hpp"

namespace weakmult {

/// Separable four-point (cubic Lagrange) interpolation of grid samples at an
/// off-grid point. Exact at grid points; O(h^4) for smooth data. The point must
/// lie in [-L/2, L/2 - h] on every axis.
Complex interpolate_cubic(const SampledFunction& f, std::span<const double> x);

}  // namespace weakmult
