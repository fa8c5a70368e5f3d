#include "weakmult/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace weakmult {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double lp_norm(std::span<const Complex> values, double cell_measure, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1");
  if (p == kInfinity) {
    double m = 0.0;
    for (const Complex& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  CompensatedSum sum;
  if (p == 1.0) {
    for (const Complex& v : values) sum.add(std::abs(v));
    return cell_measure * sum.value();
  }
  if (p == 2.0) {
    for (const Complex& v : values) sum.add(std::norm(v));
    return std::sqrt(cell_measure * sum.value());
  }
  for (const Complex& v : values) sum.add(std::pow(std::abs(v), p));
  return std::pow(cell_measure * sum.value(), 1.0 / p);
}

double lp_norm(const SampledFunction& f, double p) {
  return lp_norm(f.values(), f.grid().cell_measure(), p);
}

}  // namespace weakmult
