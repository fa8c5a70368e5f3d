#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "weakmult/grid.hpp"

namespace weakmult {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Positive-weight rule for the surface measure of the unit sphere S^s in R^{s+1}.
///   s = 0: the two points +-1 with unit weights;
///   s = 1: M equispaced angles, weights 2 pi / M;
///   s = 2: M Gauss-Legendre nodes in cos(polar) times 2M azimuths, exact for
///          polynomials of degree <= 2M - 1.
class SphereQuadrature {
 public:
  SphereQuadrature(int sphere_dimension, int resolution);

  int sphere_dimension() const { return sphere_dimension_; }
  int ambient_dimension() const { return sphere_dimension_ + 1; }
  int resolution() const { return resolution_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<std::array<double, 3>>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Node i as a span of ambient_dimension() coordinates.
  std::span<const double> node(std::size_t i) const {
    return {nodes_[i].data(), static_cast<std::size_t>(ambient_dimension())};
  }

  /// sum_i w_i values[i].
  double integrate(std::span<const double> values) const;
  double integrate(const std::function<double(std::span<const double>)>& f) const;

 private:
  int sphere_dimension_;
  int resolution_;
  std::vector<std::array<double, 3>> nodes_;
  std::vector<double> weights_;
};

SphereQuadrature make_quadrature(int sphere_dimension, int resolution);

/// Values of grid samples at the quadrature nodes (cubic interpolation).
std::vector<Complex> values_on_sphere(const SampledFunction& f, const SphereQuadrature& quad);

using SphereFunction = std::function<Complex(std::span<const double>)>;

/// int_{S^{d-1}} |K| log(1 + |K|) dsigma from node values.
double zygmund_functional(std::span<const Complex> node_values, const SphereQuadrature& quad);
double zygmund_functional(const SphereFunction& kernel, const SphereQuadrature& quad);
/// Grid-sampled kernel, evaluated at the nodes by cubic interpolation.
double zygmund_functional(const SampledFunction& kernel, const SphereQuadrature& quad);

}  // namespace weakmult
