#include "robbins/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "robbins/special.hpp"

namespace robbins {

Interval::Interval(double lo, double hi) : lower(lo), upper(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw DomainError("Interval requires lower <= upper");
  }
}

PersistenceLevel::PersistenceLevel(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("persistence epsilon must lie strictly between 0 and 1");
  }
  log_epsilon_ = std::log(epsilon);
}

NormalWeight::NormalWeight(double mean_, double variance_) : mean(mean_), variance(variance_) {
  if (!std::isfinite(mean) || !(variance > 0.0) || !std::isfinite(variance)) {
    throw DomainError("normal weight needs a finite mean and positive variance");
  }
}

double NormalWeight::log_density(double x) const { return normal_log_density(x, mean, variance); }

BetaWeight::BetaWeight(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("beta weight needs positive shape parameters");
  }
}

double BetaWeight::log_density(double theta) const {
  return xlogy(alpha - 1.0, theta) + xlog1py(beta - 1.0, -theta) - log_beta(alpha, beta);
}

NormalInverseGamma::NormalInverseGamma(double mu0_, double kappa0_, double alpha0_, double beta0_)
    : mu0(mu0_), kappa0(kappa0_), alpha0(alpha0_), beta0(beta0_) {
  if (!std::isfinite(mu0) || !(kappa0 > 0.0) || !(alpha0 > 0.0) || !(beta0 > 0.0)) {
    throw DomainError("normal-inverse-gamma weight needs finite mu0 and positive kappa0, alpha0, beta0");
  }
}

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& family) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("weight '" + family + "': cannot parse number '" + item + "'");
    }
  }
  return out;
}

}  // namespace

WeightSpec parse_weight(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
  const auto p = parse_numbers(params, family);
  auto expect = [&](std::size_t count) {
    if (p.size() != count) {
      throw DomainError("weight '" + family + "' expects " + std::to_string(count) + " parameters");
    }
  };
  if (family == "normal") {
    expect(2);
    return NormalWeight{p[0], p[1]};
  }
  if (family == "beta") {
    expect(2);
    return BetaWeight{p[0], p[1]};
  }
  if (family == "nig") {
    expect(4);
    return NormalInverseGamma{p[0], p[1], p[2], p[3]};
  }
  if (family == "logodds") {
    expect(0);
    return LogOddsJeffreysInduced{};
  }
  throw DomainError("unknown weight family '" + family + "' (normal, beta, nig, logodds)");
}

std::string to_string(const WeightSpec& weight) {
  std::ostringstream os;
  os.precision(12);
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, NormalWeight>) {
          os << "normal:" << w.mean << ',' << w.variance;
        } else if constexpr (std::is_same_v<W, BetaWeight>) {
          os << "beta:" << w.alpha << ',' << w.beta;
        } else if constexpr (std::is_same_v<W, NormalInverseGamma>) {
          os << "nig:" << w.mu0 << ',' << w.kappa0 << ',' << w.alpha0 << ',' << w.beta0;
        } else {
          os << "logodds";
        }
      },
      weight);
  return os.str();
}

SequenceMonitor::SequenceMonitor(double true_value) : true_value_(true_value) {}

void SequenceMonitor::update(const Interval& interval) {
  max_lower_ = std::max(max_lower_, interval.lower);
  min_upper_ = std::min(min_upper_, interval.upper);
  // Touching intervals share a point and do not contradict.
  if (max_lower_ > min_upper_) contradicted_ = true;
  if (max_lower_ > true_value_ || min_upper_ < true_value_) noncovered_ = true;
}

SequenceMonitor monitor_update(SequenceMonitor monitor, const Interval& interval) {
  monitor.update(interval);
  return monitor;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

}  // namespace robbins
