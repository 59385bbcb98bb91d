#pragma once

// Log-odds ratio of two Bernoulli samples.  The exact sequence conditions on
// the total number of successes, which leaves S1 with a Fisher noncentral
// hypergeometric law depending on psi only.

#include <utility>
#include <vector>

#include "robbins/core.hpp"
#include "robbins/engine.hpp"

namespace robbins::two_bernoulli {

/// Observed value outside the support of the conditional distribution.
class SupportError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct TwoSampleStat {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;

  TwoSampleStat(std::size_t n1, std::size_t n2, std::size_t s1, std::size_t s2);
  [[nodiscard]] std::size_t total() const { return s1 + s2; }
};

/// Fisher noncentral hypergeometric law of S1 given S1 + S2 = t.
class FisherNoncentralHypergeometric {
 public:
  FisherNoncentralHypergeometric(std::size_t n1, std::size_t n2, std::size_t t);

  [[nodiscard]] std::size_t support_min() const { return lo_; }
  [[nodiscard]] std::size_t support_max() const { return hi_; }
  [[nodiscard]] bool degenerate() const { return lo_ == hi_; }

  [[nodiscard]] double log_pmf(std::size_t s1, double psi) const;
  [[nodiscard]] double mean(double psi) const;
  [[nodiscard]] double variance(double psi) const;

 private:
  // log normaliser sum_u C(n1,u) C(n2,t-u) e^{psi u}; also returns E[U], E[U^2].
  double log_normaliser(double psi, double* m1, double* m2) const;

  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
  std::vector<double> log_coef_;
};

double fnch_log_pmf(std::size_t s1, std::size_t n1, std::size_t n2, std::size_t t, double psi);

/// pi(psi) = psi e^{psi/2} / (pi^2 (e^psi - 1)), with pi(0) = 1/pi^2.
double log_odds_weight_density(double psi);
double log_odds_weight_log_density(double psi);

/// Conditional maximum likelihood estimate (solves E_psi[S1] = s1).
/// Infinite when s1 sits on the edge of the support.
double conditional_mle(const TwoSampleStat& stat);

struct ConditionalRegion {
  Interval interval;  // endpoints are +-infinity on unbounded sides
  bool lower_unbounded = false;
  bool upper_unbounded = false;
  double mle = 0.0;
  double log_q = 0.0;
  double threshold = 0.0;
};

/// Exact conditional Robbins region under the log-odds weight density.
ConditionalRegion robbins_conditional_interval(const TwoSampleStat& stat,
                                               const PersistenceLevel& level);

/// log q for the conditional likelihood under pi(psi), by quadrature.
MixtureLogDensity conditional_log_mixture(const TwoSampleStat& stat);

struct LogOddsEstimate {
  double psi_hat;
  double variance;
};

/// Continuity-corrected (+0.5) log-odds ratio and its variance estimate.
LogOddsEstimate continuity_corrected_estimates(const TwoSampleStat& stat);

/// psi_hat +- d_n with variance proxy (n1+n2) v_n over n1+n2 observations.
Interval approx_interval_log_odds(const TwoSampleStat& stat, const NormalWeight& weight,
                                  const PersistenceLevel& level);

/// psi_hat +- z_{(1+conf)/2} sqrt(v_n).
Interval wald_interval_log_odds(const TwoSampleStat& stat, double confidence);

/// log(theta1 (1 - theta2) / (theta2 (1 - theta1))).
double log_odds_ratio(double theta1, double theta2);

}  // namespace robbins::two_bernoulli
