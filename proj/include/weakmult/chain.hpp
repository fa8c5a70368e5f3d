#pragma once

#include <string>
#include <vector>

#include "weakmult/multiplier.hpp"
#include "weakmult/sphere.hpp"

namespace weakmult {

/// One displayed inequality lhs <= constant_used * rhs of the weak (1,1) bound.
struct ChainStep {
  int step = 0;
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant_used = 1.0;
  bool pass = false;
};

/// ||f_i^v||_inf <= ||f_i||_1 for one summand.
struct HausdorffYoungCheck {
  std::size_t summand = 0;
  double sup_norm = 0.0;
  double l1_norm = 0.0;
  bool pass = false;
};

struct ChainReport {
  std::vector<ChainStep> steps;
  std::vector<HausdorffYoungCheck> hausdorff_young;
  /// max(probe constant, restriction ratios of the g_i themselves).
  double restriction_constant = 0.0;
  /// ||g_i^v||_{L^2(sphere)} / ||g_i||_q per summand.
  std::vector<double> summand_ratios;

  bool passed() const;
  /// First failing step number, 0 if every step passes.
  int first_failure() const;
};

inline constexpr double kChainRelativeSlack = 1e-8;

/// Evaluates the chain
///   Q0 = int |K| log(1+|K|)                               K = sum_i F_i G_i
///   Q1 = sum_i int |F_i G_i| log(1+|K|)
///   Q2 = sum_i ||F_i||_inf int |G_i| log(1+|K|)
///   Q3 = sum_i ||F_i||_inf int |G_i| |K|
///   Q4 = sum_ij ||F_i F_j||_inf int |G_i||G_j|
///   Q5 = sum_ij ||F_i F_j||_inf ||G_i||_{L^2} ||G_j||_{L^2}
///   Q6 = sum_ij ||f_i||_1 ||f_j||_1 ||g_i||_q ||g_j||_q
/// with F = f^v and G = g^v on `grid` (factors sampled on grid.dual()), sphere
/// integrals by `quad`, and sup norms over grid points and sphere nodes. Step k
/// checks Q_{k-1} <= Q_k (1 + 1e-8); step 6 multiplies Q6 by C^2 with C the
/// larger of `probe_constant` and the summands' own restriction ratios.
ChainReport proof_chain_check(const ClassAMultiplier& m, const SphereQuadrature& quad,
                              const UniformGrid& grid, double probe_constant);

}  // namespace weakmult
