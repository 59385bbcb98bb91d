#pragma once

// Model-agnostic machinery for Robbins regions
//   { theta : p_n(y; theta) >= epsilon * q_n(y) },   q_n = integral of p_n * pi,
// solved as the level set { theta : loglik(theta) >= log(epsilon) + log q_n }.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>

#include "robbins/core.hpp"

namespace robbins {

/// Threshold exceeds the maximum log-likelihood; only possible with an inexact q_n.
class ThresholdAboveMax : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No sign change found while expanding over an unbounded domain.
class NoBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The integrand produced a non-finite value after the max shift.
class NonFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A concave log-likelihood with known maximiser.
struct LogLikelihoodFn {
  std::function<double(double)> eval;
  double mle = 0.0;
  double max_value = 0.0;
  /// Parameter domain; endpoints may be infinite.  Finite endpoints are
  /// evaluated directly, so `eval` must accept them (returning -inf is fine).
  double domain_lower = -kInf;
  double domain_upper = kInf;
  /// Initial bracketing step, ideally of the order of the region half-width.
  double step = 1.0;
};

struct MixtureLogDensity {
  enum class Method { ExactClosedForm, Laplace, Quadrature };
  double value = 0.0;
  Method method = Method::ExactClosedForm;
  double abs_error = 0.0;  // quadrature error estimate on the log scale
  bool converged = true;
};

/// A level set of a concave function.  Truncation flags mark endpoints that
/// sit on the parameter-domain boundary rather than on the level curve.
struct Region {
  Interval interval;
  bool lower_truncated = false;
  bool upper_truncated = false;
  double threshold = 0.0;
};

inline constexpr double kBisectionTolerance = 1e-9;

/// { theta : loglik(theta) >= threshold } for concave loglik.
/// Endpoints are bracketed by step doubling from the MLE, then bisected.
Region level_set(const LogLikelihoodFn& loglik, double threshold,
                 double tolerance = kBisectionTolerance);

/// Robbins region: level set at log(epsilon) + log q_n.
Region robbins_region(const LogLikelihoodFn& loglik, const MixtureLogDensity& log_qn,
                      const PersistenceLevel& level, double tolerance = kBisectionTolerance);

/// Half-width of the exact normal Robbins interval,
///   sqrt(v/n) * sqrt(log((tau0^2 + v/n)/(v/n)) + (est - mu0)^2/(tau0^2 + v/n) - 2 log eps),
/// where v is the per-observation variance (sigma0^2, or n * v_n for the
/// Wald-type approximation).
double closed_form_half_width(double variance_proxy, double n, double estimate,
                              const NormalWeight& weight, const PersistenceLevel& level);

/// Laplace approximation to log q_n:
///   loglik(mle) + log pi(mle) + (dim/2) log(2 pi) - (1/2) log|j_n(mle)|.
MixtureLogDensity laplace_log_mixture(double max_loglik, double weight_density_at_mle,
                                      double observed_info_at_mle, int dim = 1);

/// Integration range.  Infinite ends are mapped onto a bounded variable;
/// `center` and `scale` locate the bulk of the integrand.
struct QuadratureDomain {
  double lower = -kInf;
  double upper = kInf;
  double center = 0.0;
  double scale = 1.0;
};

inline constexpr double kQuadratureRelTolerance = 1e-8;

/// log of the integral of exp(loglik + log_weight) over the domain, by adaptive
/// Gauss-Kronrod (7/15) on the max-shifted integrand.
MixtureLogDensity quadrature_log_mixture(const std::function<double(double)>& loglik,
                                         const std::function<double(double)>& log_weight,
                                         const QuadratureDomain& domain,
                                         double rel_tolerance = kQuadratureRelTolerance);

/// One simulated data stream observed under the true parameter.  Each call
/// draws one more observation and returns log q_n - loglik_n(theta_true).
class LogRatioProcess {
 public:
  virtual ~LogRatioProcess() = default;
  virtual double advance(Rng& rng) = 0;
};

using LogRatioFactory = std::function<std::unique_ptr<LogRatioProcess>()>;

struct VilleEstimate {
  double k = 0.0;
  std::size_t reps = 0;
  std::size_t crossings = 0;
  double probability = 0.0;
  double standard_error = 0.0;

  [[nodiscard]] double bound() const { return 1.0 / k; }
  [[nodiscard]] bool within_bound() const { return probability <= bound() + 3.0 * standard_error; }
};

/// Monte Carlo estimate of P(q_n / p_n(theta) >= k for some n <= n_max).
/// threads <= 0 uses the OpenMP default.
VilleEstimate verify_ville_inequality(const LogRatioFactory& make_process, double k,
                                      std::size_t n_max, std::size_t reps, std::uint64_t seed,
                                      int threads = 0);

}  // namespace robbins
