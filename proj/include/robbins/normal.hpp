#pragma once

// Normal mean: exact known-variance sequence, the profile-likelihood sequence
// under a normal-inverse-gamma weight, the Wald-type approximation with
// estimated variance, and the fixed-level z interval used as a comparator.

#include <memory>

#include "robbins/core.hpp"
#include "robbins/engine.hpp"

namespace robbins::normal {

struct NormalSuffStat {
  std::size_t n = 0;
  double ybar = 0.0;
  /// MLE of the variance, (1/n) sum (y_i - ybar)^2.
  double sigma_hat_sq = 0.0;

  NormalSuffStat(std::size_t n, double ybar, double sigma_hat_sq = 0.0);
};

/// ybar +- d_n(sigma0^2).
Interval robbins_interval_known_var(const NormalSuffStat& stat, double sigma0_sq,
                                    const NormalWeight& weight, const PersistenceLevel& level);

/// Log-likelihood of the sample mean, theta -> log N(ybar; theta, sigma0^2/n).
LogLikelihoodFn known_var_loglik(const NormalSuffStat& stat, double sigma0_sq);

/// Exact log q_n for the sample mean: log N(ybar; mu0, tau0^2 + sigma0^2/n).
MixtureLogDensity known_var_log_mixture(const NormalSuffStat& stat, double sigma0_sq,
                                        const NormalWeight& weight);

/// ybar +- sigma0 z_{(1+conf)/2} / sqrt(n).
Interval classical_interval(const NormalSuffStat& stat, double sigma0_sq, double confidence);

/// Profile log-likelihood of mu for the full sample,
///   -(n/2) log(2 pi sigma_mu^2) - n/2,  sigma_mu^2 = sigma_hat^2 + (ybar - mu)^2.
LogLikelihoodFn profile_loglik(const NormalSuffStat& stat);

/// Exact log marginal density of the full sample under a normal-inverse-gamma
/// weight (evaluated from the sufficient statistics).
double nig_log_marginal(const NormalSuffStat& stat, const NormalInverseGamma& weight);

/// Multiplier h_n such that the profile-likelihood sequence is ybar +- sigma_hat h_n.
///
/// With L = -(2/n)(log eps + log q_n) - log(2 pi) - 1 the region
/// { mu : profile(mu) >= log eps + log q_n } is { mu : sigma_mu^2 <= e^L },
/// so (ybar - mu)^2 <= e^L - sigma_hat^2 and h_n = sqrt(e^L / sigma_hat^2 - 1).
double nig_profile_multiplier(const NormalSuffStat& stat, const NormalInverseGamma& weight,
                              const PersistenceLevel& level);

Interval nig_profile_interval(const NormalSuffStat& stat, const NormalInverseGamma& weight,
                              const PersistenceLevel& level);

/// ybar +- d_n(sigma_hat^2): the Wald-type sequence with psi_hat = ybar and
/// v_n = sigma_hat^2 / n.
Interval approx_interval_unknown_var(const NormalSuffStat& stat, const NormalWeight& weight,
                                     const PersistenceLevel& level);

/// Ville process: y_i ~ N(theta, sigma0^2) with a normal weight.
std::unique_ptr<LogRatioProcess> make_ratio_process(double theta, double sigma0_sq,
                                                    const NormalWeight& weight);

}  // namespace robbins::normal
