#include "weakmult/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "weakmult/interpolate.hpp"
#include "weakmult/norms.hpp"

namespace weakmult {

using std::numbers::pi;

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  const auto n = static_cast<std::size_t>(order);
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereQuadrature::SphereQuadrature(int sphere_dimension, int resolution)
    : sphere_dimension_(sphere_dimension), resolution_(resolution) {
  if (sphere_dimension < 0 || sphere_dimension > 2) {
    throw std::invalid_argument("sphere dimension must be 0, 1 or 2, got " +
                                std::to_string(sphere_dimension));
  }
  if (resolution < 4) throw std::invalid_argument("sphere quadrature resolution must be >= 4");

  if (sphere_dimension == 0) {
    nodes_ = {{-1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    weights_ = {1.0, 1.0};
    return;
  }
  if (sphere_dimension == 1) {
    const double w = 2.0 * pi / resolution;
    for (int k = 0; k < resolution; ++k) {
      const double theta = w * k;
      nodes_.push_back({std::cos(theta), std::sin(theta), 0.0});
      weights_.push_back(w);
    }
    return;
  }
  const GaussLegendreRule polar = gauss_legendre(resolution);
  const int azimuths = 2 * resolution;
  const double dphi = 2.0 * pi / azimuths;
  for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
    const double z = polar.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int k = 0; k < azimuths; ++k) {
      const double phi = dphi * k;
      nodes_.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
      weights_.push_back(polar.weights[i] * dphi);
    }
  }
}

double SphereQuadrature::integrate(std::span<const double> values) const {
  if (values.size() != weights_.size()) throw std::invalid_argument("value count differs from node count");
  CompensatedSum sum;
  for (std::size_t i = 0; i < values.size(); ++i) sum.add(weights_[i] * values[i]);
  return sum.value();
}

double SphereQuadrature::integrate(const std::function<double(std::span<const double>)>& f) const {
  std::vector<double> values(size());
  for (std::size_t i = 0; i < size(); ++i) values[i] = f(node(i));
  return integrate(values);
}

SphereQuadrature make_quadrature(int sphere_dimension, int resolution) {
  return SphereQuadrature(sphere_dimension, resolution);
}

std::vector<Complex> values_on_sphere(const SampledFunction& f, const SphereQuadrature& quad) {
  if (f.grid().dimension() != quad.ambient_dimension()) {
    throw std::invalid_argument("grid dimension does not match the sphere's ambient dimension");
  }
  std::vector<Complex> out(quad.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = interpolate_cubic(f, quad.node(i));
  return out;
}

double zygmund_functional(std::span<const Complex> node_values, const SphereQuadrature& quad) {
  std::vector<double> integrand(node_values.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    const double m = std::abs(node_values[i]);
    integrand[i] = m * std::log1p(m);
  }
  return quad.integrate(integrand);
}

double zygmund_functional(const SphereFunction& kernel, const SphereQuadrature& quad) {
  std::vector<Complex> values(quad.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = kernel(quad.node(i));
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw std::domain_error("zygmund_functional: kernel is not finite at a sphere node");
    }
  }
  return zygmund_functional(values, quad);
}

double zygmund_functional(const SampledFunction& kernel, const SphereQuadrature& quad) {
  return zygmund_functional(values_on_sphere(kernel, quad), quad);
}

}  // namespace weakmult
