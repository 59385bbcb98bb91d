#pragma once

// Bernoulli proportion: exact Robbins sequence through the beta-binomial
// mixture, the likelihood-ratio interval, and the arcsine-scale approximation.

#include <memory>

#include "robbins/core.hpp"
#include "robbins/engine.hpp"

namespace robbins::bernoulli {

struct BernoulliSuffStat {
  std::size_t n = 0;
  std::size_t s = 0;

  BernoulliSuffStat(std::size_t n, std::size_t s);
  [[nodiscard]] double mle() const { return static_cast<double>(s) / static_cast<double>(n); }
};

/// log C(n,s) B(s + a, n - s + b) / B(a, b).
double beta_binomial_log_pmf(const BernoulliSuffStat& stat, const BetaWeight& weight);

/// Binomial log-likelihood on the closed domain [0, 1].
LogLikelihoodFn binomial_loglik(const BernoulliSuffStat& stat);

/// Exact region; endpoints clipped at 0 or 1 carry truncation flags.
Region robbins_region_bernoulli(const BernoulliSuffStat& stat, const BetaWeight& weight,
                                const PersistenceLevel& level);

Interval robbins_interval_bernoulli(const BernoulliSuffStat& stat, const BetaWeight& weight,
                                    const PersistenceLevel& level);

/// { theta : loglik(theta) >= loglik(mle) - chi2_{1,conf} / 2 }.
Interval lr_interval(const BernoulliSuffStat& stat, double confidence);

/// omega(theta) = arcsin(sqrt(theta)).
double omega(double theta);

/// Normal weight on the omega scale with the mean and variance of omega(theta)
/// under Beta(a, b), by adaptive quadrature.
NormalWeight matched_omega_weight(const BetaWeight& weight);

/// omega(ybar) +- d_n with variance proxy 1/4, mapped back by theta = sin^2(omega).
Interval arcsine_approx_interval(const BernoulliSuffStat& stat, const NormalWeight& weight_on_omega,
                                 const PersistenceLevel& level);

/// Inverse sampling: number of trials n needed to reach s successes.  The
/// log-likelihood differs from the binomial one by log(s/n).
LogLikelihoodFn negative_binomial_loglik(const BernoulliSuffStat& stat);
double negative_binomial_log_mixture(const BernoulliSuffStat& stat, const BetaWeight& weight);

/// Ville process: Bernoulli(theta) observations, Beta weight.
std::unique_ptr<LogRatioProcess> make_ratio_process(double theta, const BetaWeight& weight);

}  // namespace robbins::bernoulli
