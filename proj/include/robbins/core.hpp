#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

namespace robbins {

/// Invalid scale, shape, level or count supplied to a model operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed real interval [lower, upper].  A point interval is allowed.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  Interval() = default;
  Interval(double lo, double hi);

  [[nodiscard]] double width() const { return upper - lower; }
  [[nodiscard]] double midpoint() const { return 0.5 * (lower + upper); }
  [[nodiscard]] bool contains(double x) const { return lower <= x && x <= upper; }
  [[nodiscard]] bool contains(const Interval& other) const {
    return lower <= other.lower && other.upper <= upper;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Persistence level 1 - epsilon of a confidence sequence; epsilon in (0, 1).
class PersistenceLevel {
 public:
  explicit PersistenceLevel(double epsilon);

  [[nodiscard]] double epsilon() const { return epsilon_; }
  [[nodiscard]] double log_epsilon() const { return log_epsilon_; }
  [[nodiscard]] double persistence() const { return 1.0 - epsilon_; }

 private:
  double epsilon_;
  double log_epsilon_;
};

// Weight (mixing) densities.  All constructors validate their parameters.

struct NormalWeight {
  double mean;
  double variance;
  NormalWeight(double mean, double variance);
  [[nodiscard]] double log_density(double x) const;
};

struct BetaWeight {
  double alpha;
  double beta;
  BetaWeight(double alpha, double beta);
  [[nodiscard]] double log_density(double theta) const;
};

/// 1/sigma^2 ~ Gamma(shape alpha0, rate beta0); mu | sigma^2 ~ N(mu0, sigma^2 / kappa0).
struct NormalInverseGamma {
  double mu0;
  double kappa0;
  double alpha0;
  double beta0;
  NormalInverseGamma(double mu0, double kappa0, double alpha0, double beta0);
};

/// Density of the log-odds ratio when both success probabilities are
/// independent Beta(1/2, 1/2).  Parameter-free.
struct LogOddsJeffreysInduced {
  friend bool operator==(const LogOddsJeffreysInduced&, const LogOddsJeffreysInduced&) = default;
};

using WeightSpec = std::variant<NormalWeight, BetaWeight, NormalInverseGamma, LogOddsJeffreysInduced>;

/// Parses `normal:mu,tau2`, `beta:a,b`, `nig:mu,kappa,alpha,beta` or `logodds`.
WeightSpec parse_weight(const std::string& text);
std::string to_string(const WeightSpec& weight);

/// Running intersection of a sequence of intervals, tracking whether it ever
/// became empty (contradiction) or ever excluded the true value (non-coverage).
class SequenceMonitor {
 public:
  explicit SequenceMonitor(double true_value);

  void update(const Interval& interval);

  [[nodiscard]] bool contradicted() const { return contradicted_; }
  [[nodiscard]] bool noncovered() const { return noncovered_; }
  [[nodiscard]] double max_lower() const { return max_lower_; }
  [[nodiscard]] double min_upper() const { return min_upper_; }
  [[nodiscard]] double true_value() const { return true_value_; }

 private:
  double max_lower_ = -std::numeric_limits<double>::infinity();
  double min_upper_ = std::numeric_limits<double>::infinity();
  double true_value_;
  bool contradicted_ = false;
  bool noncovered_ = false;
};

/// Functional form of SequenceMonitor::update.
SequenceMonitor monitor_update(SequenceMonitor monitor, const Interval& interval);

// Random streams.
//
// Replication r of a run seeded with s draws from std::mt19937_64 seeded by
// substream_seed(s, r) = splitmix64(s ^ splitmix64(r)).  The stream depends
// only on (s, r), so results do not depend on how replications are scheduled.

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

using Rng = std::mt19937_64;

inline Rng make_substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(substream_seed(seed, index));
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace robbins
