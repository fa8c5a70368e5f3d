#include "weakmult/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <string>

namespace weakmult {

namespace {

// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftBuffer {
 public:
  explicit FftBuffer(std::size_t n)
      : data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (data_ == nullptr) throw std::bad_alloc();
  }
  ~FftBuffer() { fftw_free(data_); }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;

  fftw_complex* get() { return data_; }

 private:
  fftw_complex* data_;
};

class FftPlan {
 public:
  FftPlan(int dimension, int n, fftw_complex* buffer, int sign) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = dimension == 1 ? fftw_plan_dft_1d(n, buffer, buffer, sign, FFTW_ESTIMATE)
                           : fftw_plan_dft_2d(n, n, buffer, buffer, sign, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  ~FftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  void execute() { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

// out_k = h^d * s_k * sum_j s_j f_j exp(sign * 2 pi i j.k / N), s_j = (-1)^{|j|}.
// With x_j = -L/2 + j h and xi_k = -N/(2L) + k/L, this is exactly the Riemann
// sum of f(x) exp(sign * 2 pi i x.xi) because N/4 is an integer.
SampledFunction centered_transform(const SampledFunction& f, int sign, const UniformGrid& onto) {
  const UniformGrid& grid = f.grid();
  const std::size_t n = grid.points_per_axis();
  const std::size_t total = grid.size();
  const bool two_d = grid.dimension() == 2;

  auto parity = [&](std::size_t flat) {
    const std::size_t s = two_d ? (flat / n + flat % n) : flat;
    return (s & 1U) ? -1.0 : 1.0;
  };

  FftBuffer buffer(total);
  FftPlan plan(grid.dimension(), static_cast<int>(n), buffer.get(), sign);
  fftw_complex* data = buffer.get();
  for (std::size_t i = 0; i < total; ++i) {
    const double s = parity(i);
    data[i][0] = s * f[i].real();
    data[i][1] = s * f[i].imag();
  }
  plan.execute();

  const double scale = grid.cell_measure();
  std::vector<Complex> out(total);
  for (std::size_t i = 0; i < total; ++i) {
    out[i] = Complex(data[i][0], data[i][1]) * (scale * parity(i));
  }
  return SampledFunction(onto, std::move(out));
}

void require_dual(const UniformGrid& from, const UniformGrid& onto) {
  const double n = static_cast<double>(from.points_per_axis());
  if (from.dimension() != onto.dimension() || from.points_per_axis() != onto.points_per_axis() ||
      std::abs(from.extent() * onto.extent() - n) > 1e-12 * n) {
    throw std::invalid_argument("transform target grid is not dual to the source grid");
  }
}

}  // namespace

SampledFunction forward_ft(const SampledFunction& f) {
  return centered_transform(f, FFTW_FORWARD, f.grid().dual());
}

SampledFunction inverse_ft(const SampledFunction& f) {
  return centered_transform(f, FFTW_BACKWARD, f.grid().dual());
}

SampledFunction forward_ft(const SampledFunction& f, const UniformGrid& onto) {
  require_dual(f.grid(), onto);
  return centered_transform(f, FFTW_FORWARD, onto);
}

SampledFunction inverse_ft(const SampledFunction& f, const UniformGrid& onto) {
  require_dual(f.grid(), onto);
  return centered_transform(f, FFTW_BACKWARD, onto);
}

double tail_fraction(const SampledFunction& f) {
  const UniformGrid& grid = f.grid();
  const std::size_t n = grid.points_per_axis();
  const std::size_t band = n / 8;
  auto outer = [&](std::size_t j) { return j < band || j >= n - band; };
  double total = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double m = std::abs(f[i]);
    total += m;
    const bool in_band = grid.dimension() == 1 ? outer(i) : (outer(i / n) || outer(i % n));
    if (in_band) tail += m;
  }
  return total > 0.0 ? tail / total : 0.0;
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         const ConvolveOptions& options) {
  require_same_grid(f, g, "convolve");
  if (options.policy != TailPolicy::kIgnore) {
    const double tail = std::max(tail_fraction(f), tail_fraction(g));
    if (tail > options.tail_tolerance) {
      const std::string msg = "convolve: tail mass fraction " + std::to_string(tail) +
                              " exceeds tolerance " + std::to_string(options.tail_tolerance) +
                              "; circular wrap-around may pollute the result";
      if (options.policy == TailPolicy::kError) throw WrapAroundError(msg);
      std::cerr << "warning: " << msg << '\n';
    }
  }
  SampledFunction spectrum = forward_ft(f) * forward_ft(g);
  return inverse_ft(spectrum, f.grid());
}

}  // namespace weakmult
