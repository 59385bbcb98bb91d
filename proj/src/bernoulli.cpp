#include "robbins/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "robbins/special.hpp"

namespace robbins::bernoulli {

BernoulliSuffStat::BernoulliSuffStat(std::size_t n_, std::size_t s_) : n(n_), s(s_) {
  if (n == 0) throw DomainError("Bernoulli statistic needs n >= 1");
  if (s > n) throw DomainError("Bernoulli statistic needs 0 <= s <= n");
}

namespace {

// Typical half-width scale, used as the first bracketing step.
double bracket_step(const BernoulliSuffStat& stat) {
  const double n = static_cast<double>(stat.n);
  const double p = stat.mle();
  return 2.0 * std::sqrt(std::max(p * (1.0 - p), 0.25 / n) / n);
}

LogLikelihoodFn kernel_loglik(const BernoulliSuffStat& stat, double log_constant) {
  const double s = static_cast<double>(stat.s);
  const double f = static_cast<double>(stat.n - stat.s);
  LogLikelihoodFn ll;
  ll.eval = [s, f, log_constant](double theta) {
    return log_constant + xlogy(s, theta) + xlog1py(f, -theta);
  };
  ll.mle = stat.mle();
  ll.max_value = ll.eval(ll.mle);
  ll.domain_lower = 0.0;
  ll.domain_upper = 1.0;
  ll.step = bracket_step(stat);
  return ll;
}

}  // namespace

double beta_binomial_log_pmf(const BernoulliSuffStat& stat, const BetaWeight& w) {
  const double n = static_cast<double>(stat.n);
  const double s = static_cast<double>(stat.s);
  return log_choose(n, s) + log_beta(s + w.alpha, n - s + w.beta) - log_beta(w.alpha, w.beta);
}

LogLikelihoodFn binomial_loglik(const BernoulliSuffStat& stat) {
  return kernel_loglik(stat, log_choose(static_cast<double>(stat.n), static_cast<double>(stat.s)));
}

Region robbins_region_bernoulli(const BernoulliSuffStat& stat, const BetaWeight& weight,
                                const PersistenceLevel& level) {
  MixtureLogDensity q;
  q.value = beta_binomial_log_pmf(stat, weight);
  return robbins_region(binomial_loglik(stat), q, level);
}

Interval robbins_interval_bernoulli(const BernoulliSuffStat& stat, const BetaWeight& weight,
                                    const PersistenceLevel& level) {
  return robbins_region_bernoulli(stat, weight, level).interval;
}

Interval lr_interval(const BernoulliSuffStat& stat, double confidence) {
  const auto ll = kernel_loglik(stat, 0.0);
  return level_set(ll, ll.max_value - 0.5 * chi_square1_quantile(confidence)).interval;
}

double omega(double theta) { return std::asin(std::sqrt(theta)); }

NormalWeight matched_omega_weight(const BetaWeight& weight) {
  // Density of omega when theta = sin^2(omega) ~ Beta(a, b):
  //   2 sin(omega)^(2a-1) cos(omega)^(2b-1) / B(a, b) on (0, pi/2).
  const auto log_density = [a = weight.alpha, b = weight.beta](double w) {
    return std::log(2.0) + (2.0 * a - 1.0) * std::log(std::sin(w)) +
           (2.0 * b - 1.0) * std::log(std::cos(w)) - log_beta(a, b);
  };
  const QuadratureDomain domain{0.0, std::numbers::pi / 2.0, std::numbers::pi / 4.0, 0.1};
  const auto log_w = [](double w) { return std::log(w); };
  const auto log_w2 = [](double w) { return 2.0 * std::log(w); };
  const double mean = std::exp(quadrature_log_mixture(log_w, log_density, domain, 1e-12).value);
  const double second = std::exp(quadrature_log_mixture(log_w2, log_density, domain, 1e-12).value);
  return NormalWeight{mean, second - mean * mean};
}

Interval arcsine_approx_interval(const BernoulliSuffStat& stat, const NormalWeight& weight_on_omega,
                                 const PersistenceLevel& level) {
  const double w_hat = omega(stat.mle());
  const double d =
      closed_form_half_width(0.25, static_cast<double>(stat.n), w_hat, weight_on_omega, level);
  const double lo = std::max(0.0, w_hat - d);
  const double hi = std::min(std::numbers::pi / 2.0, w_hat + d);
  const double s_lo = std::sin(lo);
  const double s_hi = std::sin(hi);
  return {s_lo * s_lo, s_hi * s_hi};
}

LogLikelihoodFn negative_binomial_loglik(const BernoulliSuffStat& stat) {
  if (stat.s == 0) throw DomainError("inverse sampling needs at least one success");
  return kernel_loglik(stat, log_choose(static_cast<double>(stat.n) - 1.0,
                                        static_cast<double>(stat.s) - 1.0));
}

double negative_binomial_log_mixture(const BernoulliSuffStat& stat, const BetaWeight& w) {
  if (stat.s == 0) throw DomainError("inverse sampling needs at least one success");
  const double n = static_cast<double>(stat.n);
  const double s = static_cast<double>(stat.s);
  return log_choose(n - 1.0, s - 1.0) + log_beta(s + w.alpha, n - s + w.beta) -
         log_beta(w.alpha, w.beta);
}

namespace {

class BernoulliRatioProcess final : public LogRatioProcess {
 public:
  BernoulliRatioProcess(double theta, BetaWeight weight)
      : theta_(theta), weight_(weight), log_b0_(log_beta(weight.alpha, weight.beta)) {}

  double advance(Rng& rng) override {
    ++n_;
    if (uniform01(rng) < theta_) ++s_;
    const double s = static_cast<double>(s_);
    const double f = static_cast<double>(n_ - s_);
    // The binomial coefficient cancels between q_n and p_n.
    return log_beta(s + weight_.alpha, f + weight_.beta) - log_b0_ - xlogy(s, theta_) -
           xlog1py(f, -theta_);
  }

 private:
  double theta_;
  BetaWeight weight_;
  double log_b0_;
  std::size_t n_ = 0;
  std::size_t s_ = 0;
};

}  // namespace

std::unique_ptr<LogRatioProcess> make_ratio_process(double theta, const BetaWeight& weight) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("Bernoulli theta must lie in (0, 1)");
  return std::make_unique<BernoulliRatioProcess>(theta, weight);
}

}  // namespace robbins::bernoulli
