#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "weakmult/grid.hpp"

namespace weakmult {

/// Non-increasing rearrangement of a sampled function as a step function:
/// f*(t) = magnitudes[k] for t in [k * step, (k + 1) * step).
class RearrangementProfile {
 public:
  /// Takes arbitrary nonnegative magnitudes and sorts them.
  RearrangementProfile(std::vector<double> magnitudes, double step);

  std::span<const double> magnitudes() const { return magnitudes_; }
  double step() const { return step_; }

  /// f*(t) for t >= 0.
  double at(double t) const;

  /// step * #{k : magnitudes[k] > alpha}.
  double distribution(double alpha) const;

 private:
  std::vector<double> magnitudes_;
  double step_;
};

RearrangementProfile rearrangement(const SampledFunction& f);

/// |{x : |f(x)| > alpha}| for alpha >= 0, counted over grid cells.
double distribution_function(const SampledFunction& f, double alpha);

/// (int_0^inf (t^{1/p} f*(t))^r dt/t)^{1/r}, evaluated exactly per step; for
/// r = kInfinity the supremum sup_t t^{1/p} f*(t).
double lorentz_norm(const RearrangementProfile& profile, double p, double r);
double lorentz_norm(const SampledFunction& f, double p, double r);

/// sup_alpha alpha * d_f(alpha)^{1/p}; identical to lorentz_norm(f, p, kInfinity).
double weak_lp_norm(const RearrangementProfile& profile, double p);
double weak_lp_norm(const SampledFunction& f, double p);

/// Weak-L^p norm of Tf over the L^p norm of f: the weak-type constant C^{1/p}
/// witnessed by this one input.
double weak_ratio(const SampledFunction& tf, const SampledFunction& f, double p);

/// Standard constant in ||f||_{p,r2} <= C ||f||_{p,r1}, r1 <= r2:
/// C = (r1/p)^{1/r1 - 1/r2}.
double lorentz_nesting_constant(double p, double r1, double r2);

/// Profile export: columns k, t_k, v_k with t_k the left end of step k.
void write_csv(std::ostream& out, const RearrangementProfile& profile);

}  // namespace weakmult
