#pragma once

#include <cmath>
#include <numbers>
#include <span>

namespace robbins {

inline constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

/// Thread-safe log|Gamma(x)|.
double log_gamma(double x);

/// log Beta(a, b).
double log_beta(double a, double b);

/// log of the binomial coefficient C(n, k); -inf outside 0 <= k <= n.
double log_choose(double n, double k);

/// x * log(y) with the convention 0 * log(0) = 0.
inline double xlogy(double x, double y) {
  return x == 0.0 ? 0.0 : x * std::log(y);
}

/// x * log1p(y) with the convention 0 * log(0) = 0.
inline double xlog1py(double x, double y) {
  return x == 0.0 ? 0.0 : x * std::log1p(y);
}

double log_sum_exp(std::span<const double> values);

/// Standard normal quantile.
double normal_quantile(double p);

/// Two-sided standard normal critical value z_{(1+conf)/2}.
double normal_critical_value(double confidence);

/// Quantile of the chi-square distribution with one degree of freedom.
double chi_square1_quantile(double p);

/// log N(x; mean, variance).
inline double normal_log_density(double x, double mean, double variance) {
  const double d = x - mean;
  return -0.5 * (kLog2Pi + std::log(variance) + d * d / variance);
}

}  // namespace robbins
