#pragma once

#include <stdexcept>

#include "weakmult/grid.hpp"

namespace weakmult {

// Continuum convention: f^(xi) = int f(x) exp(-2 pi i x.xi) dx, so that
// (f * g)^ = f^ g^ and (f g)^v = f^v * g^v carry no constants.

/// Riemann-sum approximation of f^ on the dual grid, scaled by the cell measure.
SampledFunction forward_ft(const SampledFunction& f);

/// Riemann-sum approximation of the inverse transform on the dual grid.
/// inverse_ft(forward_ft(f)) reproduces f up to roundoff.
SampledFunction inverse_ft(const SampledFunction& f);

/// Same transforms, landing on an explicitly given grid. `onto` must be dual to
/// f's grid (same point count, extent N/L up to roundoff); use this to come back
/// to the exact original grid after a round trip.
SampledFunction forward_ft(const SampledFunction& f, const UniformGrid& onto);
SampledFunction inverse_ft(const SampledFunction& f, const UniformGrid& onto);

enum class TailPolicy { kIgnore, kWarn, kError };

struct ConvolveOptions {
  TailPolicy policy = TailPolicy::kWarn;
  /// Largest tolerated fraction of L1 mass in the outer band (outer 1/8 of the
  /// extent on each side of each axis).
  double tail_tolerance = 1e-6;
};

/// Fraction of the L1 mass of f that sits in the outer band of its grid.
double tail_fraction(const SampledFunction& f);

/// Continuum convolution approximated by the spectrally computed, cell-scaled
/// circular convolution. Result sampled at the grid points of f.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         const ConvolveOptions& options = {});

/// Thrown by convolve under TailPolicy::kError.
class WrapAroundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weakmult
