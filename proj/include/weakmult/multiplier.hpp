#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "weakmult/descriptor.hpp"
#include "weakmult/fourier.hpp"
#include "weakmult/grid.hpp"

namespace weakmult {

/// A frequency-side factor given as the forward transform of a closed-form
/// spatial function, so that its inverse transform is `spatial` itself.
struct SpectralFactor {
  FunctionDescriptor spatial;
};

/// A factor f_i or g_i of a class-A multiplier, living on the frequency side.
using FactorSource = std::variant<FunctionDescriptor, SpectralFactor, SampledFunction>;

/// Samples of a factor on a frequency grid. Sampled factors must already live there.
SampledFunction realize(const FactorSource& factor, const UniformGrid& frequency_grid);

/// One pair (f_i, g_i) of the representation m = sum_i f_i * g_i, with cached
/// ||f_i||_1 and ||g_i||_q.
class ClassASummand {
 public:
  /// Norms are evaluated on `reference_grid` (a frequency grid).
  ClassASummand(FactorSource f, FactorSource g, double q, const UniformGrid& reference_grid);
  /// Closed-form norms; both factors must be single Gaussian descriptors.
  ClassASummand(FactorSource f, FactorSource g, double q, int dimension);

  const FactorSource& f() const { return f_; }
  const FactorSource& g() const { return g_; }
  double q() const { return q_; }
  double f_norm() const { return f_norm_; }
  double g_norm() const { return g_norm_; }
  const std::optional<UniformGrid>& reference_grid() const { return reference_grid_; }

  /// Same factors with ||g||_q re-evaluated for a new exponent.
  ClassASummand with_exponent(double q) const;

 private:
  FactorSource f_;
  FactorSource g_;
  double q_;
  int dimension_;
  std::optional<UniformGrid> reference_grid_;
  double f_norm_ = 0.0;
  double g_norm_ = 0.0;
};

/// m = sum_i f_i * g_i for a fixed, finite representation.
class ClassAMultiplier {
 public:
  ClassAMultiplier(int dimension, double q, std::vector<ClassASummand> summands = {});

  int dimension() const { return dimension_; }
  double q() const { return q_; }
  const std::vector<ClassASummand>& summands() const { return summands_; }

  /// (2d + 2) / (d + 3).
  double admissible_bound() const;
  /// 1 <= q <= (2d + 2)/(d + 3). Inadmissible multipliers are still usable.
  bool admissible() const;

  ClassAMultiplier with_exponent(double q) const;
  ClassAMultiplier concat(const ClassAMultiplier& other) const;

 private:
  int dimension_;
  double q_;
  std::vector<ClassASummand> summands_;
};

/// sum_i ||f_i||_1 ||g_i||_q for the stored representation (no infimum).
double a_norm(const ClassAMultiplier& m);

/// Samples of a convolution kernel K = m^v on a spatial grid.
class KernelFunction {
 public:
  explicit KernelFunction(SampledFunction samples) : samples_(std::move(samples)) {}
  const SampledFunction& samples() const { return samples_; }
  const UniformGrid& grid() const { return samples_.grid(); }

 private:
  SampledFunction samples_;
};

/// K = sum_i inverse_ft(f_i) inverse_ft(g_i), factors sampled on grid.dual().
KernelFunction assemble_kernel(const ClassAMultiplier& m, const UniformGrid& grid);

/// T_m f = K * f.
SampledFunction apply(const KernelFunction& kernel, const SampledFunction& f,
                      const ConvolveOptions& options = {});

/// exp(-y^2) y^{-2} 1{y > 1}.
FunctionDescriptor paper_example_kernel_descriptor();

/// The kernel above sampled in closed form on a 1-D grid.
KernelFunction paper_example_kernel(const UniformGrid& grid);

/// d = 1, q = 1 multiplier with f = (exp(-y^2))^ and g = (y^{-2} 1{y>1})^, so that
/// its assembled kernel is paper_example_kernel. Norms evaluated on `reference_grid`.
ClassAMultiplier paper_example_multiplier(const UniformGrid& reference_grid);

/// m itself, rebuilt on a frequency grid as sum_i convolve(f_i, g_i).
SampledFunction reconstruct_multiplier(const ClassAMultiplier& m, const UniformGrid& frequency_grid);

struct LinftyProbeRow {
  UniformGrid grid;
  double sup = 0.0;
  /// Largest outer-band mass fraction among the reconstructed factors.
  double tail = 0.0;
};

/// Per-grid max |m| of the reconstructed multiplier. Data only; no verdict.
std::vector<LinftyProbeRow> linfty_probe(const ClassAMultiplier& m,
                                         const std::vector<UniformGrid>& frequency_grids);

}  // namespace weakmult
