#include "robbins/two_bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "robbins/special.hpp"

namespace robbins::two_bernoulli {

TwoSampleStat::TwoSampleStat(std::size_t n1_, std::size_t n2_, std::size_t s1_, std::size_t s2_)
    : n1(n1_), n2(n2_), s1(s1_), s2(s2_) {
  if (n1 == 0 || n2 == 0) throw DomainError("two-sample statistic needs n1, n2 >= 1");
  if (s1 > n1 || s2 > n2) throw DomainError("two-sample statistic needs s1 <= n1 and s2 <= n2");
}

FisherNoncentralHypergeometric::FisherNoncentralHypergeometric(std::size_t n1, std::size_t n2,
                                                               std::size_t t) {
  if (t > n1 + n2) throw DomainError("total successes exceed n1 + n2");
  lo_ = t > n2 ? t - n2 : 0;
  hi_ = std::min(n1, t);
  log_coef_.reserve(hi_ - lo_ + 1);
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  for (std::size_t u = lo_; u <= hi_; ++u) {
    log_coef_.push_back(log_choose(a, static_cast<double>(u)) +
                        log_choose(b, static_cast<double>(t - u)));
  }
}

double FisherNoncentralHypergeometric::log_normaliser(double psi, double* m1, double* m2) const {
  double peak = -kInf;
  for (std::size_t i = 0; i < log_coef_.size(); ++i) {
    peak = std::max(peak, log_coef_[i] + psi * static_cast<double>(lo_ + i));
  }
  double sum = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < log_coef_.size(); ++i) {
    const double u = static_cast<double>(lo_ + i);
    const double w = std::exp(log_coef_[i] + psi * u - peak);
    sum += w;
    s1 += w * u;
    s2 += w * u * u;
  }
  if (m1 != nullptr) *m1 = s1 / sum;
  if (m2 != nullptr) *m2 = s2 / sum;
  return peak + std::log(sum);
}

double FisherNoncentralHypergeometric::log_pmf(std::size_t s1, double psi) const {
  if (s1 < lo_ || s1 > hi_) throw SupportError("s1 lies outside the conditional support");
  return log_coef_[s1 - lo_] + psi * static_cast<double>(s1) - log_normaliser(psi, nullptr, nullptr);
}

double FisherNoncentralHypergeometric::mean(double psi) const {
  double m1 = 0.0;
  log_normaliser(psi, &m1, nullptr);
  return m1;
}

double FisherNoncentralHypergeometric::variance(double psi) const {
  double m1 = 0.0;
  double m2 = 0.0;
  log_normaliser(psi, &m1, &m2);
  return std::max(0.0, m2 - m1 * m1);
}

double fnch_log_pmf(std::size_t s1, std::size_t n1, std::size_t n2, std::size_t t, double psi) {
  return FisherNoncentralHypergeometric(n1, n2, t).log_pmf(s1, psi);
}

double log_odds_weight_density(double psi) {
  if (std::abs(psi) < 1e-6) return (1.0 - psi * psi / 24.0) / (std::numbers::pi * std::numbers::pi);
  return std::exp(log_odds_weight_log_density(psi));
}

double log_odds_weight_log_density(double psi) {
  // pi(psi) = (x / sinh x) / pi^2 with x = psi / 2.
  const double x = 0.5 * std::abs(psi);
  const double log_pi2 = 2.0 * std::log(std::numbers::pi);
  if (x < 5e-7) return std::log1p(-x * x / 6.0) - log_pi2;
  const double log_sinh =
      x > 20.0 ? x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x)) : std::log(std::sinh(x));
  return std::log(x) - log_sinh - log_pi2;
}

double conditional_mle(const TwoSampleStat& stat) {
  const FisherNoncentralHypergeometric law(stat.n1, stat.n2, stat.total());
  if (law.degenerate()) throw DomainError("conditional likelihood is flat: total is degenerate");
  if (stat.s1 == law.support_min()) return -kInf;
  if (stat.s1 == law.support_max()) return kInf;
  const double target = static_cast<double>(stat.s1);
  double lo = -1.0;
  double hi = 1.0;
  while (law.mean(lo) > target) lo *= 2.0;
  while (law.mean(hi) < target) hi *= 2.0;
  while (hi - lo > 1e-13 * (1.0 + std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (law.mean(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

MixtureLogDensity conditional_log_mixture(const TwoSampleStat& stat) {
  const FisherNoncentralHypergeometric law(stat.n1, stat.n2, stat.total());
  if (law.degenerate()) {
    MixtureLogDensity q;  // likelihood is identically 1 and the weight integrates to 1
    return q;
  }
  const double mle = conditional_mle(stat);
  const auto loglik = [&law, s1 = stat.s1](double psi) { return law.log_pmf(s1, psi); };
  const auto log_weight = [](double psi) { return log_odds_weight_log_density(psi); };
  QuadratureDomain domain;
  if (std::isfinite(mle)) {
    const double sd = 1.0 / std::sqrt(law.variance(mle));
    domain = QuadratureDomain{mle - 40.0 * sd, mle + 40.0 * sd, mle, sd};
  } else {
    domain = QuadratureDomain{-kInf, kInf, 0.0, 2.0};
  }
  return quadrature_log_mixture(loglik, log_weight, domain);
}

ConditionalRegion robbins_conditional_interval(const TwoSampleStat& stat,
                                               const PersistenceLevel& level) {
  const FisherNoncentralHypergeometric law(stat.n1, stat.n2, stat.total());
  ConditionalRegion out;
  if (law.degenerate()) {
    out.interval = Interval(-kInf, kInf);
    out.lower_unbounded = out.upper_unbounded = true;
    out.mle = 0.0;
    out.log_q = 0.0;
    out.threshold = level.log_epsilon();
    return out;
  }
  out.log_q = conditional_log_mixture(stat).value;
  out.threshold = level.log_epsilon() + out.log_q;
  out.mle = conditional_mle(stat);

  LogLikelihoodFn ll;
  ll.eval = [&law, s1 = stat.s1](double psi) { return law.log_pmf(s1, psi); };
  if (std::isfinite(out.mle)) {
    ll.mle = out.mle;
    ll.step = 1.0 / std::sqrt(law.variance(out.mle));
  } else {
    // Monotone likelihood: anchor the search at a point inside the region and
    // treat the anchor as the open end of the domain.
    const double dir = out.mle > 0 ? 1.0 : -1.0;
    double anchor = dir;
    while (ll.eval(anchor) < out.threshold) anchor *= 2.0;
    ll.mle = anchor;
    ll.step = 1.0;
    (dir > 0 ? ll.domain_upper : ll.domain_lower) = anchor;
  }
  ll.max_value = ll.eval(ll.mle);
  const Region region = level_set(ll, out.threshold);
  out.interval = region.interval;
  if (!std::isfinite(out.mle)) {
    if (out.mle > 0) {
      out.upper_unbounded = true;
      out.interval.upper = kInf;
    } else {
      out.lower_unbounded = true;
      out.interval.lower = -kInf;
    }
  }
  return out;
}

LogOddsEstimate continuity_corrected_estimates(const TwoSampleStat& stat) {
  const double a = static_cast<double>(stat.s1) + 0.5;
  const double b = static_cast<double>(stat.n1 - stat.s1) + 0.5;
  const double c = static_cast<double>(stat.s2) + 0.5;
  const double d = static_cast<double>(stat.n2 - stat.s2) + 0.5;
  return {std::log(a * d / (b * c)), 1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d};
}

Interval approx_interval_log_odds(const TwoSampleStat& stat, const NormalWeight& weight,
                                  const PersistenceLevel& level) {
  const auto est = continuity_corrected_estimates(stat);
  const double n = static_cast<double>(stat.n1 + stat.n2);
  const double half = closed_form_half_width(n * est.variance, n, est.psi_hat, weight, level);
  return {est.psi_hat - half, est.psi_hat + half};
}

Interval wald_interval_log_odds(const TwoSampleStat& stat, double confidence) {
  const auto est = continuity_corrected_estimates(stat);
  const double half = normal_critical_value(confidence) * std::sqrt(est.variance);
  return {est.psi_hat - half, est.psi_hat + half};
}

double log_odds_ratio(double theta1, double theta2) {
  if (!(theta1 > 0.0 && theta1 < 1.0 && theta2 > 0.0 && theta2 < 1.0)) {
    throw DomainError("success probabilities must lie in (0, 1)");
  }
  return std::log(theta1 * (1.0 - theta2) / (theta2 * (1.0 - theta1)));
}

}  // namespace robbins::two_bernoulli
