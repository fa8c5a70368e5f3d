#pragma once

#include <limits>
#include <span>

#include "weakmult/grid.hpp"

namespace weakmult {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// (h^d sum |v_j|^p)^{1/p}, or max |v_j| for p = kInfinity. Requires p >= 1.
double lp_norm(const SampledFunction& f, double p);

/// Same on a bare magnitude array with the given cell measure.
double lp_norm(std::span<const Complex> values, double cell_measure, double p);

}  // namespace weakmult
