#pragma once

#include <span>

namespace weakmult {

/// n^{-1/2} int_0^inf t^{r-1} exp(-r t^2 / (2n)) dt
///   = n^{-1/2} (1/2) Gamma(r/2) (2n/r)^{r/2},
/// the lower-bound envelope for ||K * h_n||_{1,r} with its constant set to 1.
/// Grows like n^{(r-1)/2}.
double envelope_value(double r, double n);

/// The same integral with the prefactor raised to the r-th power inside the
/// r-th root, (n^{-r/2} int_0^inf t^{r-1} exp(-r t^2/(2n)) dt)^{1/r}; constant in n.
double envelope_value_rth_power(double r, double n);

/// Least-squares log-log slope of envelope_value over n_values; (r - 1)/2.
/// Needs >= 3 values spanning >= 2 decades.
double envelope_exponent(double r, std::span<const double> n_values);

}  // namespace weakmult
