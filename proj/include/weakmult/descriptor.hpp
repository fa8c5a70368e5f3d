#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weakmult/grid.hpp"

namespace weakmult {

class FunctionDescriptor;

/// c * exp(-a |x - center|^2).
struct Gaussian {
  double a = 1.0;
  double c = 1.0;
  std::array<double, 3> center{};
};

/// y^{-2} for y > 1, zero otherwise; acts on the first coordinate.
struct TruncatedPower {};

/// Half-open box [lo, hi) (per axis, first d axes used).
struct Indicator {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
};

struct Product {
  std::vector<FunctionDescriptor> factors;
};

struct LinearCombination {
  std::vector<std::pair<double, FunctionDescriptor>> terms;
};

/// Closed-form real-valued function on R^d with exact pointwise evaluation.
class FunctionDescriptor {
 public:
  using Form = std::variant<Gaussian, TruncatedPower, Indicator, Product, LinearCombination>;

  FunctionDescriptor(Form form) : form_(std::move(form)) {}  // NOLINT(google-explicit-constructor)

  const Form& form() const { return form_; }

  /// Value at `x` (the first x.size() coordinates are meaningful).
  double operator()(std::span<const double> x) const;

  /// True when every leaf is Gaussian, so the transform has a closed form.
  bool is_gaussian_mixture() const;

  /// Inverse transform (exp(+2 pi i x.xi) convention) of a Gaussian mixture at x in R^d.
  Complex inverse_transform_at(std::span<const double> x) const;

  /// Short human-readable tag, e.g. "gaussian(a=1,c=1)".
  std::string describe() const;

 private:
  Form form_;
};

FunctionDescriptor gaussian(double a, double c, std::array<double, 3> center = {});
FunctionDescriptor truncated_power();
FunctionDescriptor indicator(double lo, double hi);
FunctionDescriptor box(std::array<double, 2> lo, std::array<double, 2> hi);
FunctionDescriptor product(FunctionDescriptor f, FunctionDescriptor g);
FunctionDescriptor combination(std::vector<std::pair<double, FunctionDescriptor>> terms);

/// h_n(y) = n^{-1/2} exp(-y^2 / n); integrates to sqrt(pi) for every n > 0.
FunctionDescriptor gaussian_family(double n);

/// values[j] = f(x_j). Throws std::domain_error on a non-finite value.
SampledFunction sample(const FunctionDescriptor& f, const UniformGrid& grid);

}  // namespace weakmult
