#include "weakmult/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "weakmult/envelope.hpp"
#include "weakmult/norms.hpp"
#include "weakmult/rearrange.hpp"

namespace weakmult {

std::vector<double> geometric_values(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("geometric_values: need 0 < lo < hi and count >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double ratio = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

UniformGrid auto_grid(double n_max, double spacing) {
  if (!(n_max > 0.0)) throw std::invalid_argument("auto_grid: n_max must be positive");
  int exponent = 0;
  if (!(spacing > 0.0) || spacing > 1.0 / 32.0 || std::frexp(spacing, &exponent) != 0.5) {
    throw std::invalid_argument("auto_grid: spacing must be 2^-k with k >= 5");
  }
  const double extent = 12.0 * std::sqrt(n_max);
  const std::size_t n = next_power_of_two(static_cast<std::size_t>(std::ceil(extent / spacing)));
  return UniformGrid(1, static_cast<double>(n) * spacing, n);
}

void validate(const SweepConfig& cfg) {
  if (!(cfg.r >= 1.0)) throw std::invalid_argument("r must be >= 1");
  if (cfg.n_values.empty()) throw std::invalid_argument("n values must not be empty");
  for (std::size_t i = 0; i < cfg.n_values.size(); ++i) {
    if (!(cfg.n_values[i] > 0.0)) throw std::invalid_argument("n values must be positive");
    if (i > 0 && !(cfg.n_values[i] > cfg.n_values[i - 1])) {
      throw std::invalid_argument("n values must be strictly increasing");
    }
  }
  if (cfg.refinement_factor < 2 || (cfg.refinement_factor & (cfg.refinement_factor - 1)) != 0) {
    throw std::invalid_argument("refinement factor must be a power of two >= 2");
  }
  if (!(cfg.burn_in >= 0.0 && cfg.burn_in < 1.0)) throw std::invalid_argument("burn-in must be in [0, 1)");
  if (cfg.grid && cfg.grid->dimension() != 1) throw std::invalid_argument("sweep grid must be 1-D");
}

std::string sharpness_verdict(double r, const std::optional<PowerLawFit>& fit, double tolerance) {
  if (!fit) return "unconverged: refinement gap above threshold, fit suppressed";
  std::ostringstream out;
  if (r == 1.0) {
    out << "r = 1: reported without a comparison verdict (measured slope " << fit->slope << ")";
    return out.str();
  }
  const double claimed = 0.5 * (r - 1.0);
  const bool near_claimed = std::abs(fit->slope - claimed) <= tolerance;
  const bool near_zero = std::abs(fit->slope) <= tolerance;
  out << "measured slope " << fit->slope << "; ";
  if (near_zero && !near_claimed) {
    out << "consistent with a constant (slope 0), not with (r-1)/2 = " << claimed;
  } else if (near_claimed && !near_zero) {
    out << "consistent with (r-1)/2 = " << claimed << ", not with a constant";
  } else if (near_claimed && near_zero) {
    out << "ambiguous: within tolerance of both 0 and (r-1)/2 = " << claimed;
  } else {
    out << "matches neither 0 nor (r-1)/2 = " << claimed;
  }
  return out.str();
}

namespace {

struct ConvolutionPair {
  RearrangementProfile base;
  RearrangementProfile refined;
  double young_bound_base;
  double young_bound_refined;
};

// ||K * h_n||_{1,r} <= ||K * h_n||_{1,1} <= ||K||_1 ||h_n||_1 (nesting constant 1 at r1 = p = 1).
void check_young(double value, double bound, double r) {
  if (value > lorentz_nesting_constant(1.0, 1.0, r) * bound * (1.0 + 1e-9)) {
    throw std::logic_error("sharpness sweep: Young bound violated; the pipeline is inconsistent");
  }
}

ConvolutionPair convolve_pair(double n, const UniformGrid& base, const UniformGrid& refined) {
  auto one = [n](const UniformGrid& grid) {
    const KernelFunction k = paper_example_kernel(grid);
    const SampledFunction h = sample(gaussian_family(n), grid);
    const SampledFunction out = apply(k, h);
    return std::make_pair(rearrangement(out), lp_norm(k.samples(), 1.0) * lp_norm(h, 1.0));
  };
  auto [pb, yb] = one(base);
  auto [pr, yr] = one(refined);
  return {std::move(pb), std::move(pr), yb, yr};
}

SweepReport finish(const SweepConfig& cfg, double r, std::vector<SweepRow> rows) {
  SweepReport report;
  report.r = r;
  report.rows = std::move(rows);
  report.claimed_slope = 0.5 * (r - 1.0);
  report.converged = std::all_of(report.rows.begin(), report.rows.end(),
                                 [&](const SweepRow& row) { return row.rel_gap < cfg.gap_threshold; });
  const auto skip = static_cast<std::size_t>(std::floor(cfg.burn_in * static_cast<double>(report.rows.size())));
  std::vector<std::pair<double, double>> points;
  std::vector<double> ns;
  for (std::size_t i = skip; i < report.rows.size(); ++i) {
    points.emplace_back(report.rows[i].n, report.rows[i].value);
    ns.push_back(report.rows[i].n);
  }
  if (points.size() >= 3) {
    std::vector<std::pair<double, double>> env;
    std::vector<std::pair<double, double>> env_r;
    for (double n : ns) {
      env.emplace_back(n, envelope_value(r, n));
      env_r.emplace_back(n, envelope_value_rth_power(r, n));
    }
    report.envelope_slope = fit_power_law(env).slope;
    report.rth_power_envelope_slope = fit_power_law(env_r).slope;
    if (report.converged) report.fit = fit_power_law(points);
  }
  report.verdict = points.size() < 3 ? "too few rows past burn-in to fit"
                                     : sharpness_verdict(r, report.fit, cfg.verdict_tolerance);
  return report;
}

}  // namespace

std::vector<SweepReport> sharpness_sweeps(const SweepConfig& cfg, const std::vector<double>& rs) {
  validate(cfg);
  if (rs.empty()) throw std::invalid_argument("at least one r value is required");
  for (double r : rs) {
    if (!(r >= 1.0)) throw std::invalid_argument("r must be >= 1");
  }
  const UniformGrid base = cfg.grid ? *cfg.grid : auto_grid(cfg.n_values.back());
  const UniformGrid refined(1, base.extent(),
                            base.points_per_axis() * static_cast<std::size_t>(cfg.refinement_factor));

  std::vector<std::vector<SweepRow>> rows(rs.size());
  for (double n : cfg.n_values) {
    const ConvolutionPair pair = convolve_pair(n, base, refined);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      SweepRow row;
      row.n = n;
      row.value = lorentz_norm(pair.base, 1.0, rs[i]);
      row.value_refined = lorentz_norm(pair.refined, 1.0, rs[i]);
      row.rel_gap = std::abs(row.value - row.value_refined) / std::abs(row.value_refined);
      check_young(row.value, pair.young_bound_base, rs[i]);
      check_young(row.value_refined, pair.young_bound_refined, rs[i]);
      rows[i].push_back(row);
    }
  }
  std::vector<SweepReport> out;
  for (std::size_t i = 0; i < rs.size(); ++i) out.push_back(finish(cfg, rs[i], std::move(rows[i])));
  return out;
}

SweepReport sharpness_sweep(const SweepConfig& cfg) { return sharpness_sweeps(cfg, {cfg.r}).front(); }

double stabilization_metric(const std::vector<double>& ratios) {
  if (ratios.size() < 2) throw std::invalid_argument("stabilization needs at least two ratios");
  const std::size_t half = ratios.size() / 2;
  const double first = *std::max_element(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(half));
  const double last = *std::max_element(ratios.begin() + static_cast<std::ptrdiff_t>(half), ratios.end());
  if (!(first > 0.0)) throw std::invalid_argument("stabilization: first-half maximum is zero");
  return std::abs(last - first) / first;
}

Weak11Report weak11_sweep(const KernelFunction& kernel, const std::string& family_name,
                          const std::vector<FamilyMember>& family) {
  if (family.size() < 4) throw std::invalid_argument("weak11 sweep needs at least 4 family members");
  Weak11Report report;
  report.family = family_name;
  std::vector<double> ratios;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const SampledFunction f = sample(family[i].descriptor, kernel.grid());
    const double ratio = weak_ratio(apply(kernel, f), f, 1.0);
    report.rows.push_back({i, family[i].parameter, ratio});
    ratios.push_back(ratio);
  }
  report.max_ratio = *std::max_element(ratios.begin(), ratios.end());
  report.stabilization = stabilization_metric(ratios);
  const std::vector<double> top(ratios.begin() + static_cast<std::ptrdiff_t>(ratios.size() / 2), ratios.end());
  report.tail_stabilization = stabilization_metric(top);
  return report;
}

}  // namespace weakmult
