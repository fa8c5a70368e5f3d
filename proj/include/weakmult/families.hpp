#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weakmult/descriptor.hpp"
#include "weakmult/multiplier.hpp"

namespace weakmult {

/// One test input of a weak-type sweep; `parameter` is the family's n.
struct FamilyMember {
  FunctionDescriptor descriptor;
  double parameter;
};

/// Names accepted by make_family: "gaussians", "indicators", "bumps".
const std::vector<std::string>& known_families();

/// 1-D input family indexed by n_values:
///   gaussians:  h_n;
///   indicators: 1[(c - 1/2) s, (c + 1/2) s) with s = 4 sqrt(n) and one seeded
///               offset c in [-1/4, 1/4];
///   bumps:      one seeded positive template of 1-3 Gaussian atoms, dilated by sqrt(n).
/// Throws std::invalid_argument for an unknown name (message lists the known ones).
std::vector<FamilyMember> make_family(const std::string& name, std::span<const double> n_values,
                                      std::uint64_t seed);

/// Seeded multiplier with 1-3 summands, every factor a positive Gaussian
/// c exp(-a |xi - xi0|^2), a in [2, 8], c in [0.5, 2], xi0 in [-1/2, 1/2]^d.
ClassAMultiplier random_gaussian_multiplier(int dimension, double q, std::uint64_t seed,
                                            const UniformGrid& reference_grid);

}  // namespace weakmult
