#include "weakmult/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "weakmult/format.hpp"
#include "weakmult/norms.hpp"

namespace weakmult {

RearrangementProfile::RearrangementProfile(std::vector<double> magnitudes, double step)
    : magnitudes_(std::move(magnitudes)), step_(step) {
  if (!(step > 0.0)) throw std::invalid_argument("rearrangement step must be positive");
  for (double v : magnitudes_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("rearrangement magnitudes must be finite and nonnegative");
    }
  }
  std::sort(magnitudes_.begin(), magnitudes_.end(), std::greater<>{});
}

double RearrangementProfile::at(double t) const {
  if (t < 0.0) throw std::invalid_argument("rearrangement evaluated at negative t");
  const auto k = static_cast<std::size_t>(std::floor(t / step_));
  return k < magnitudes_.size() ? magnitudes_[k] : 0.0;
}

double RearrangementProfile::distribution(double alpha) const {
  if (alpha < 0.0) throw std::invalid_argument("distribution level must be nonnegative");
  // First position whose magnitude is <= alpha.
  const auto it = std::partition_point(magnitudes_.begin(), magnitudes_.end(),
                                       [alpha](double v) { return v > alpha; });
  return step_ * static_cast<double>(it - magnitudes_.begin());
}

RearrangementProfile rearrangement(const SampledFunction& f) {
  std::vector<double> m(f.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::abs(f[i]);
  return RearrangementProfile(std::move(m), f.grid().cell_measure());
}

double distribution_function(const SampledFunction& f, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("distribution level must be nonnegative");
  std::size_t count = 0;
  for (const Complex& v : f.values()) count += std::abs(v) > alpha ? 1 : 0;
  return f.grid().cell_measure() * static_cast<double>(count);
}

namespace {

void check_exponents(double p, double r) {
  if (!(p >= 1.0) || p == kInfinity) throw std::invalid_argument("Lorentz exponent p must be in [1, inf)");
  if (!(r >= 1.0)) throw std::invalid_argument("Lorentz exponent r must be >= 1");
}

// k^s - (k-1)^s for k >= 1, without cancellation for large k.
double power_increment(double k, double s) {
  if (k == 1.0) return 1.0;
  if (s == 1.0) return 1.0;
  return -std::pow(k, s) * std::expm1(s * std::log1p(-1.0 / k));
}

}  // namespace

double lorentz_norm(const RearrangementProfile& profile, double p, double r) {
  check_exponents(p, r);
  const auto v = profile.magnitudes();
  const double mu = profile.step();
  if (r == kInfinity) {
    double best = 0.0;
    for (std::size_t k = 0; k < v.size() && v[k] > 0.0; ++k) {
      best = std::max(best, std::pow(static_cast<double>(k + 1) * mu, 1.0 / p) * v[k]);
    }
    return best;
  }
  const double s = r / p;
  CompensatedSum sum;
  for (std::size_t k = 0; k < v.size() && v[k] > 0.0; ++k) {
    const double vr = r == 1.0 ? v[k] : std::pow(v[k], r);
    sum.add(vr * power_increment(static_cast<double>(k + 1), s));
  }
  // int_{(k-1)mu}^{k mu} t^{s-1} dt = mu^s (k^s - (k-1)^s) / s
  const double total = sum.value() * std::pow(mu, s) / s;
  return r == 1.0 ? total : std::pow(total, 1.0 / r);
}

double lorentz_norm(const SampledFunction& f, double p, double r) {
  return lorentz_norm(rearrangement(f), p, r);
}

double weak_lp_norm(const RearrangementProfile& profile, double p) {
  return lorentz_norm(profile, p, kInfinity);
}

double weak_lp_norm(const SampledFunction& f, double p) { return weak_lp_norm(rearrangement(f), p); }

double weak_ratio(const SampledFunction& tf, const SampledFunction& f, double p) {
  const double denom = lp_norm(f, p);
  if (!(denom > 0.0)) throw std::invalid_argument("weak_ratio: input has zero norm");
  return weak_lp_norm(tf, p) / denom;
}

double lorentz_nesting_constant(double p, double r1, double r2) {
  if (!(r1 <= r2)) throw std::invalid_argument("lorentz_nesting_constant: need r1 <= r2");
  const double inv_r2 = r2 == kInfinity ? 0.0 : 1.0 / r2;
  return std::pow(r1 / p, 1.0 / r1 - inv_r2);
}

void write_csv(std::ostream& out, const RearrangementProfile& profile) {
  out << "k,t_k,v_k\n";
  const auto v = profile.magnitudes();
  for (std::size_t k = 0; k < v.size(); ++k) {
    out << k << ',' << format_double(static_cast<double>(k) * profile.step()) << ','
        << format_double(v[k]) << '\n';
  }
}

}  // namespace weakmult
