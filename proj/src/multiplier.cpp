#include "weakmult/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weakmult/norms.hpp"

namespace weakmult {

SampledFunction realize(const FactorSource& factor, const UniformGrid& frequency_grid) {
  if (const auto* d = std::get_if<FunctionDescriptor>(&factor)) return sample(*d, frequency_grid);
  if (const auto* s = std::get_if<SpectralFactor>(&factor)) {
    return forward_ft(sample(s->spatial, frequency_grid.dual()), frequency_grid);
  }
  const auto& sampled = std::get<SampledFunction>(factor);
  if (!(sampled.grid() == frequency_grid)) {
    throw std::invalid_argument("sampled factor does not live on the requested grid");
  }
  return sampled;
}

namespace {

double closed_form_norm(const FactorSource& factor, double p, int dimension) {
  const auto* d = std::get_if<FunctionDescriptor>(&factor);
  const Gaussian* g = d ? std::get_if<Gaussian>(&d->form()) : nullptr;
  if (g == nullptr) {
    throw std::invalid_argument("closed-form summand norms need single Gaussian factors");
  }
  // ||c exp(-a|x|^2)||_p = |c| (pi / (a p))^{d / (2p)}
  return std::abs(g->c) * std::pow(std::numbers::pi / (g->a * p), 0.5 * dimension / p);
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string("non-finite summand norm: ") + what);
}

}  // namespace

ClassASummand::ClassASummand(FactorSource f, FactorSource g, double q, const UniformGrid& reference_grid)
    : f_(std::move(f)), g_(std::move(g)), q_(q), dimension_(reference_grid.dimension()),
      reference_grid_(reference_grid) {
  if (!(q >= 1.0)) throw std::invalid_argument("summand exponent q must be >= 1");
  f_norm_ = lp_norm(realize(f_, reference_grid), 1.0);
  g_norm_ = lp_norm(realize(g_, reference_grid), q);
  require_finite(f_norm_, "||f||_1");
  require_finite(g_norm_, "||g||_q");
}

ClassASummand::ClassASummand(FactorSource f, FactorSource g, double q, int dimension)
    : f_(std::move(f)), g_(std::move(g)), q_(q), dimension_(dimension) {
  if (!(q >= 1.0)) throw std::invalid_argument("summand exponent q must be >= 1");
  f_norm_ = closed_form_norm(f_, 1.0, dimension);
  g_norm_ = closed_form_norm(g_, q, dimension);
}

ClassASummand ClassASummand::with_exponent(double q) const {
  if (reference_grid_) return ClassASummand(f_, g_, q, *reference_grid_);
  return ClassASummand(f_, g_, q, dimension_);
}

ClassAMultiplier::ClassAMultiplier(int dimension, double q, std::vector<ClassASummand> summands)
    : dimension_(dimension), q_(q), summands_(std::move(summands)) {
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("multiplier dimension must be 1, 2 or 3");
  if (!(q >= 1.0)) throw std::invalid_argument("multiplier exponent q must be >= 1");
  for (const auto& s : summands_) {
    if (s.q() != q) throw std::invalid_argument("summand exponent differs from multiplier exponent");
    if (s.reference_grid() && s.reference_grid()->dimension() != dimension) {
      throw std::invalid_argument("summand reference grid has the wrong dimension");
    }
  }
}

double ClassAMultiplier::admissible_bound() const {
  return (2.0 * dimension_ + 2.0) / (dimension_ + 3.0);
}

bool ClassAMultiplier::admissible() const {
  return q_ >= 1.0 && q_ <= admissible_bound() * (1.0 + 1e-12);
}

ClassAMultiplier ClassAMultiplier::with_exponent(double q) const {
  std::vector<ClassASummand> out;
  out.reserve(summands_.size());
  for (const auto& s : summands_) out.push_back(s.with_exponent(q));
  return ClassAMultiplier(dimension_, q, std::move(out));
}

ClassAMultiplier ClassAMultiplier::concat(const ClassAMultiplier& other) const {
  if (other.dimension_ != dimension_ || other.q_ != q_) {
    throw std::invalid_argument("concat: multipliers differ in dimension or exponent");
  }
  std::vector<ClassASummand> out(summands_);
  out.insert(out.end(), other.summands_.begin(), other.summands_.end());
  return ClassAMultiplier(dimension_, q_, std::move(out));
}

double a_norm(const ClassAMultiplier& m) {
  double total = 0.0;
  for (const auto& s : m.summands()) total += s.f_norm() * s.g_norm();
  return total;
}

KernelFunction assemble_kernel(const ClassAMultiplier& m, const UniformGrid& grid) {
  if (m.dimension() != grid.dimension()) {
    throw std::invalid_argument("assemble_kernel: grid dimension differs from multiplier dimension");
  }
  const UniformGrid freq = grid.dual();
  SampledFunction kernel = SampledFunction::zeros(grid);
  for (const auto& s : m.summands()) {
    const SampledFunction f_spatial = inverse_ft(realize(s.f(), freq), grid);
    const SampledFunction g_spatial = inverse_ft(realize(s.g(), freq), grid);
    kernel = kernel + f_spatial * g_spatial;
  }
  return KernelFunction(std::move(kernel));
}

SampledFunction apply(const KernelFunction& kernel, const SampledFunction& f,
                      const ConvolveOptions& options) {
  return convolve(kernel.samples(), f, options);
}

FunctionDescriptor paper_example_kernel_descriptor() {
  return product(gaussian(1.0, 1.0), truncated_power());
}

KernelFunction paper_example_kernel(const UniformGrid& grid) {
  if (grid.dimension() != 1) throw std::invalid_argument("paper_example_kernel: grid must be 1-D");
  return KernelFunction(sample(paper_example_kernel_descriptor(), grid));
}

ClassAMultiplier paper_example_multiplier(const UniformGrid& reference_grid) {
  if (reference_grid.dimension() != 1) {
    throw std::invalid_argument("paper_example_multiplier: grid must be 1-D");
  }
  ClassASummand s(SpectralFactor{gaussian(1.0, 1.0)}, SpectralFactor{truncated_power()}, 1.0,
                  reference_grid);
  return ClassAMultiplier(1, 1.0, {std::move(s)});
}

SampledFunction reconstruct_multiplier(const ClassAMultiplier& m, const UniformGrid& frequency_grid) {
  SampledFunction total = SampledFunction::zeros(frequency_grid);
  const ConvolveOptions quiet{TailPolicy::kIgnore, 0.0};
  for (const auto& s : m.summands()) {
    total = total + convolve(realize(s.f(), frequency_grid), realize(s.g(), frequency_grid), quiet);
  }
  return total;
}

std::vector<LinftyProbeRow> linfty_probe(const ClassAMultiplier& m,
                                         const std::vector<UniformGrid>& frequency_grids) {
  std::vector<LinftyProbeRow> rows;
  rows.reserve(frequency_grids.size());
  for (const auto& grid : frequency_grids) {
    double tail = 0.0;
    for (const auto& s : m.summands()) {
      tail = std::max({tail, tail_fraction(realize(s.f(), grid)), tail_fraction(realize(s.g(), grid))});
    }
    rows.push_back({grid, lp_norm(reconstruct_multiplier(m, grid), kInfinity), tail});
  }
  return rows;
}

}  // namespace weakmult
