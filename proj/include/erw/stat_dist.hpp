#pragma once

#include <span>

namespace erw {

// Inverse CDF of the standard normal distribution (Wichura's AS 241,
// PPND16 variant). Absolute error below 1e-15 over (0,1); returns +/-inf
// at the endpoints.
double normal_quantile(double u);

// Standard normal CDF, computed through erfc for full-tail accuracy.
double normal_cdf(double x);

// CDF-level quantile of the chi-squared distribution with one degree of
// freedom, derived as the squared normal quantile so that the test/CI
// duality V_n (p_hat - p0)^2 <= z  <=>  sqrt(V_n) |p_hat - p0| <= t holds
// exactly in floating point.
double chi_squared_1_quantile(double level);

// Kolmogorov-Smirnov distance between the empirical CDF of `sorted`
// (ascending) and the standard normal CDF.
double ks_distance_normal(std::span<const double> sorted);

} // namespace erw
