#include "robbins/normal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "robbins/special.hpp"

namespace robbins::normal {

NormalSuffStat::NormalSuffStat(std::size_t n_, double ybar_, double sigma_hat_sq_)
    : n(n_), ybar(ybar_), sigma_hat_sq(sigma_hat_sq_) {
  if (n == 0) throw DomainError("normal statistic needs n >= 1");
  if (!std::isfinite(ybar) || !(sigma_hat_sq >= 0.0)) {
    throw DomainError("normal statistic needs finite ybar and sigma_hat_sq >= 0");
  }
}

namespace {

void require_positive_variance(double sigma0_sq) {
  if (!(sigma0_sq > 0.0) || !std::isfinite(sigma0_sq)) {
    throw DomainError("known variance sigma0^2 must be positive");
  }
}

}  // namespace

Interval robbins_interval_known_var(const NormalSuffStat& stat, double sigma0_sq,
                                    const NormalWeight& weight, const PersistenceLevel& level) {
  require_positive_variance(sigma0_sq);
  const double d =
      closed_form_half_width(sigma0_sq, static_cast<double>(stat.n), stat.ybar, weight, level);
  return {stat.ybar - d, stat.ybar + d};
}

LogLikelihoodFn known_var_loglik(const NormalSuffStat& stat, double sigma0_sq) {
  require_positive_variance(sigma0_sq);
  const double var = sigma0_sq / static_cast<double>(stat.n);
  LogLikelihoodFn f;
  f.eval = [ybar = stat.ybar, var](double theta) { return normal_log_density(ybar, theta, var); };
  f.mle = stat.ybar;
  f.max_value = normal_log_density(stat.ybar, stat.ybar, var);
  f.step = std::sqrt(var);
  return f;
}

MixtureLogDensity known_var_log_mixture(const NormalSuffStat& stat, double sigma0_sq,
                                        const NormalWeight& weight) {
  require_positive_variance(sigma0_sq);
  MixtureLogDensity q;
  q.value = normal_log_density(stat.ybar, weight.mean,
                               weight.variance + sigma0_sq / static_cast<double>(stat.n));
  return q;
}

Interval classical_interval(const NormalSuffStat& stat, double sigma0_sq, double confidence) {
  require_positive_variance(sigma0_sq);
  const double half = std::sqrt(sigma0_sq / static_cast<double>(stat.n)) *
                      normal_critical_value(confidence);
  return {stat.ybar - half, stat.ybar + half};
}

LogLikelihoodFn profile_loglik(const NormalSuffStat& stat) {
  if (!(stat.sigma_hat_sq > 0.0)) throw DomainError("profile likelihood needs sigma_hat^2 > 0");
  const double n = static_cast<double>(stat.n);
  LogLikelihoodFn f;
  f.eval = [n, ybar = stat.ybar, s2 = stat.sigma_hat_sq](double mu) {
    const double d = ybar - mu;
    return -0.5 * n * (kLog2Pi + std::log(s2 + d * d)) - 0.5 * n;
  };
  f.mle = stat.ybar;
  f.max_value = f.eval(stat.ybar);
  f.step = std::sqrt(stat.sigma_hat_sq / n);
  return f;
}

double nig_log_marginal(const NormalSuffStat& stat, const NormalInverseGamma& w) {
  const double n = static_cast<double>(stat.n);
  const double kappa_n = w.kappa0 + n;
  const double alpha_n = w.alpha0 + 0.5 * n;
  const double d = stat.ybar - w.mu0;
  const double beta_n = w.beta0 + 0.5 * n * stat.sigma_hat_sq + w.kappa0 * n * d * d / (2.0 * kappa_n);
  return -0.5 * n * kLog2Pi + 0.5 * std::log(w.kappa0 / kappa_n) + w.alpha0 * std::log(w.beta0) -
         alpha_n * std::log(beta_n) + log_gamma(alpha_n) - log_gamma(w.alpha0);
}

double nig_profile_multiplier(const NormalSuffStat& stat, const NormalInverseGamma& weight,
                              const PersistenceLevel& level) {
  if (stat.n < 2) throw DomainError("profile sequence needs n >= 2");
  if (!(stat.sigma_hat_sq > 0.0)) throw DomainError("profile sequence needs sigma_hat^2 > 0");
  const double n = static_cast<double>(stat.n);
  const double threshold = level.log_epsilon() + nig_log_marginal(stat, weight);
  const double log_bound = -2.0 / n * threshold - kLog2Pi - 1.0;
  // log(e^L / s2) >= 0 always: the MLE belongs to the region.
  return std::sqrt(std::max(0.0, std::expm1(log_bound - std::log(stat.sigma_hat_sq))));
}

Interval nig_profile_interval(const NormalSuffStat& stat, const NormalInverseGamma& weight,
                              const PersistenceLevel& level) {
  const double half = std::sqrt(stat.sigma_hat_sq) * nig_profile_multiplier(stat, weight, level);
  return {stat.ybar - half, stat.ybar + half};
}

Interval approx_interval_unknown_var(const NormalSuffStat& stat, const NormalWeight& weight,
                                     const PersistenceLevel& level) {
  if (!(stat.sigma_hat_sq > 0.0)) throw DomainError("approximate sequence needs sigma_hat^2 > 0");
  const double d = closed_form_half_width(stat.sigma_hat_sq, static_cast<double>(stat.n),
                                          stat.ybar, weight, level);
  return {stat.ybar - d, stat.ybar + d};
}

namespace {

class NormalRatioProcess final : public LogRatioProcess {
 public:
  NormalRatioProcess(double theta, double sigma0_sq, NormalWeight weight)
      : theta_(theta), sigma0_sq_(sigma0_sq), weight_(weight), dist_(theta, std::sqrt(sigma0_sq)) {}

  double advance(Rng& rng) override {
    sum_ += dist_(rng);
    ++n_;
    const double n = static_cast<double>(n_);
    const double ybar = sum_ / n;
    const double var = sigma0_sq_ / n;
    return normal_log_density(ybar, weight_.mean, weight_.variance + var) -
           normal_log_density(ybar, theta_, var);
  }

 private:
  double theta_;
  double sigma0_sq_;
  NormalWeight weight_;
  std::normal_distribution<double> dist_;
  std::size_t n_ = 0;
  double sum_ = 0.0;
};

}  // namespace

std::unique_ptr<LogRatioProcess> make_ratio_process(double theta, double sigma0_sq,
                                                    const NormalWeight& weight) {
  require_positive_variance(sigma0_sq);
  return std::make_unique<NormalRatioProcess>(theta, sigma0_sq, weight);
}

}  // namespace robbins::normal
