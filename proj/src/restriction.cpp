#include "weakmult/restriction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weakmult/fourier.hpp"
#include "weakmult/norms.hpp"
#include "weakmult/rng.hpp"

namespace weakmult {

double sphere_l2_of_transform(const SampledFunction& f, const SphereQuadrature& quad,
                              TransformDirection direction) {
  const SampledFunction transformed =
      direction == TransformDirection::kForward ? forward_ft(f) : inverse_ft(f);
  const std::vector<Complex> values = values_on_sphere(transformed, quad);
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(values[i]);
  return std::sqrt(quad.integrate(sq));
}

double restriction_exponent_bound(int dimension) {
  return (2.0 * dimension + 2.0) / (dimension + 3.0);
}

double restriction_ratio(const SampledFunction& f, double q, const SphereQuadrature& quad) {
  const double denom = lp_norm(f, q);
  if (!(denom > 0.0)) throw std::invalid_argument("restriction_ratio: input has zero L^q norm");
  return sphere_l2_of_transform(f, quad) / denom;
}

UniformGrid bump_grid(int dimension, double dilation) {
  if (!(dilation > 0.0)) throw std::invalid_argument("bump dilation must be positive");
  const double h = std::min(dilation / 8.0, 0.25);
  const std::size_t n = next_power_of_two(static_cast<std::size_t>(std::ceil(16.0 * dilation / h)));
  return UniformGrid(dimension, static_cast<double>(n) * h, n);
}

std::vector<Bump> dilated_bumps(int dimension, int count, std::uint64_t seed, double lambda_min,
                                double lambda_max) {
  if (count < 1) throw std::invalid_argument("bump family needs at least one member");
  if (!(lambda_min > 0.0) || !(lambda_min <= lambda_max)) {
    throw std::invalid_argument("bump dilation range must satisfy 0 < min <= max");
  }
  Rng rng(seed);
  std::vector<Bump> out;
  out.reserve(static_cast<std::size_t>(count));
  const double log_lo = std::log(lambda_min);
  const double log_hi = std::log(lambda_max);
  for (int i = 0; i < count; ++i) {
    const double lambda = std::exp(rng.uniform(log_lo, log_hi));
    const int atoms = rng.integer(1, 3);
    std::vector<std::pair<double, FunctionDescriptor>> terms;
    for (int k = 0; k < atoms; ++k) {
      const double weight = rng.uniform(0.5, 1.5);
      std::array<double, 3> center{};
      for (int axis = 0; axis < dimension; ++axis) center[static_cast<std::size_t>(axis)] = lambda * rng.uniform(-1.0, 1.0);
      terms.emplace_back(weight, gaussian(std::numbers::pi / (lambda * lambda), 1.0, center));
    }
    out.push_back({combination(std::move(terms)), lambda, bump_grid(dimension, lambda)});
  }
  return out;
}

std::vector<RestrictionRow> restriction_table(const std::vector<Bump>& bumps, double q,
                                              const SphereQuadrature& quad) {
  std::vector<RestrictionRow> rows;
  rows.reserve(bumps.size());
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    const SampledFunction f = sample(bumps[i].descriptor, bumps[i].grid);
    rows.push_back({i, bumps[i].dilation, restriction_ratio(f, q, quad)});
  }
  return rows;
}

double restriction_constant(const std::vector<RestrictionRow>& rows) {
  double best = 0.0;
  for (const auto& r : rows) best = std::max(best, r.ratio);
  return best;
}

}  // namespace weakmult
