#pragma once

#include <cstdint>
#include <vector>

#include "weakmult/descriptor.hpp"
#include "weakmult/sphere.hpp"

namespace weakmult {

enum class TransformDirection { kForward, kInverse };

/// (int_{S^{d-1}} |F|^2 dsigma)^{1/2} where F is the forward (or inverse)
/// transform of f, interpolated at the quadrature nodes.
double sphere_l2_of_transform(const SampledFunction& f, const SphereQuadrature& quad,
                              TransformDirection direction = TransformDirection::kForward);

/// (2d + 2) / (d + 3): the top of the restriction range for R^d.
double restriction_exponent_bound(int dimension);

/// ||f^||_{L^2(S^{d-1})} / ||f||_q: the restriction constant witnessed by f.
double restriction_ratio(const SampledFunction& f, double q, const SphereQuadrature& quad);

/// A dilated test bump together with a grid sized for it.
struct Bump {
  FunctionDescriptor descriptor;
  double dilation;
  UniformGrid grid;
};

/// Grid for a bump at dilation lambda: spacing min(lambda/8, 1/4), extent >= 16 lambda.
UniformGrid bump_grid(int dimension, double dilation);

/// `count` seeded positive bumps in R^d: sums of 1-3 Gaussian atoms of width
/// lambda with centers within lambda of the origin, lambda log-uniform in
/// [lambda_min, lambda_max].
std::vector<Bump> dilated_bumps(int dimension, int count, std::uint64_t seed,
                                double lambda_min = 0.125, double lambda_max = 8.0);

struct RestrictionRow {
  std::size_t index;
  double dilation;
  double ratio;
};

std::vector<RestrictionRow> restriction_table(const std::vector<Bump>& bumps, double q,
                                              const SphereQuadrature& quad);

/// Largest ratio in the table: the empirical restriction constant.
double restriction_constant(const std::vector<RestrictionRow>& rows);

}  // namespace weakmult
