#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weakmult/families.hpp"
#include "weakmult/multiplier.hpp"
#include "weakmult/power_law.hpp"

namespace weakmult {

/// Geometric sequence of `count` values from lo to hi inclusive.
std::vector<double> geometric_values(double lo, double hi, int count);

/// 1-D grid for inputs up to h_{n_max}: extent >= 12 sqrt(n_max) and the given
/// spacing (a power of two fraction, so that y = 1 is a grid point).
UniformGrid auto_grid(double n_max, double spacing = 1.0 / 256.0);

struct SweepConfig {
  double r = 2.0;
  std::vector<double> n_values = geometric_values(1.0, 4096.0, 13);
  /// Explicit base grid; auto_grid(max n) when empty.
  std::optional<UniformGrid> grid;
  /// Point-count multiplier of the refinement run (fixed extent).
  int refinement_factor = 2;
  /// Fraction of the smallest n values left out of fits.
  double burn_in = 0.25;
  /// Rows whose relative refinement gap reaches this are unconverged.
  double gap_threshold = 0.01;
  /// Slope distance within which a candidate behaviour counts as matched.
  double verdict_tolerance = 0.05;
  std::uint64_t seed = 1;
};

/// Checks n_values strictly increasing and positive, r >= 1 and the rest.
void validate(const SweepConfig& cfg);

struct SweepRow {
  double n = 0.0;
  double value = 0.0;
  double value_refined = 0.0;
  double rel_gap = 0.0;
};

struct SweepReport {
  double r = 0.0;
  std::vector<SweepRow> rows;
  /// Empty when any row is unconverged.
  std::optional<PowerLawFit> fit;
  bool converged = false;
  /// (r - 1)/2.
  double claimed_slope = 0.0;
  /// Fitted slope of envelope_value over the same n values.
  double envelope_slope = 0.0;
  /// Fitted slope of envelope_value_rth_power (0 up to roundoff).
  double rth_power_envelope_slope = 0.0;
  std::string verdict;
};

/// ||K * h_n||_{1,r} for the closed-form example kernel K over cfg.n_values,
/// on the base grid and its refinement, with a log-log fit past the burn-in.
SweepReport sharpness_sweep(const SweepConfig& cfg);

/// Several r values sharing one set of convolutions; cfg.r is ignored.
std::vector<SweepReport> sharpness_sweeps(const SweepConfig& cfg, const std::vector<double>& rs);

/// Verdict text comparing a fitted slope with (r-1)/2 and with 0.
std::string sharpness_verdict(double r, const std::optional<PowerLawFit>& fit, double tolerance);

struct Weak11Row {
  std::size_t index = 0;
  double parameter = 0.0;
  double ratio = 0.0;
};

struct Weak11Report {
  std::string family;
  std::vector<Weak11Row> rows;
  double max_ratio = 0.0;
  /// stabilization_metric over the whole family.
  double stabilization = 0.0;
  /// stabilization_metric over the top half of the family.
  double tail_stabilization = 0.0;
};

/// |max(last half) - max(first half)| / max(first half).
double stabilization_metric(const std::vector<double>& ratios);

/// weak_ratio(K * f, f, 1) for every family member sampled on the kernel grid.
Weak11Report weak11_sweep(const KernelFunction& kernel, const std::string& family_name,
                          const std::vector<FamilyMember>& family);

}  // namespace weakmult
