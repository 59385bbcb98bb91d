#include "robbins/special.hpp"

#include <algorithm>
#include <limits>

#include <boost/math/special_functions/erf.hpp>

#include "robbins/core.hpp"

namespace robbins {

double log_gamma(double x) {
  // std::lgamma writes the global signgam; lgamma_r does not.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_choose(double n, double k) {
  if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(m)) return m;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - m);
  return m + std::log(sum);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: p must lie in (0, 1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double normal_critical_value(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("confidence level must lie in (0, 1)");
  }
  // z_{(1+c)/2} = sqrt(2) erfc^{-1}(1 - c); avoids cancellation as c -> 0.
  return std::numbers::sqrt2 * boost::math::erfc_inv(1.0 - confidence);
}

double chi_square1_quantile(double p) {
  const double z = normal_critical_value(p);
  return z * z;
}

}  // namespace robbins
