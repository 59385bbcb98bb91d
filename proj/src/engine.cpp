#include "robbins/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include <omp.h>

#include "robbins/special.hpp"

namespace robbins {

namespace {

constexpr double kLevelGapTolerance = 1e-9;

// Finds the boundary of {f >= threshold} moving from the MLE in direction `dir`.
double find_endpoint(const LogLikelihoodFn& loglik, double threshold, int dir, double tolerance,
                     bool& truncated) {
  truncated = false;
  const double bound = dir > 0 ? loglik.domain_upper : loglik.domain_lower;
  double inside = loglik.mle;
  double outside = 0.0;
  double step = loglik.step > 0.0 ? loglik.step : 1.0;
  const double give_up = 1e15 * (1.0 + std::abs(loglik.mle));
  for (;;) {
    double x = loglik.mle + dir * step;
    const bool at_bound = dir > 0 ? x >= bound : x <= bound;
    if (at_bound) x = bound;
    const double f = loglik.eval(x);
    if (std::isnan(f)) throw NonFinite("log-likelihood returned NaN while bracketing");
    if (f < threshold) {
      outside = x;
      break;
    }
    if (at_bound) {
      truncated = true;
      return bound;
    }
    inside = x;
    step *= 2.0;
    if (step > give_up) throw NoBracket("no level-set crossing found on an unbounded domain");
  }
  // Stop on the x tolerance, but keep halving while the log-likelihood at the
  // midpoint is still visibly off the level; steep sides need a few extra steps.
  for (;;) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) return mid;
    const double f = loglik.eval(mid);
    if (std::abs(outside - inside) <= tolerance && std::abs(f - threshold) <= kLevelGapTolerance) {
      return mid;
    }
    if (f >= threshold) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Change of variables theta = phi(t) from a bounded t-range to the domain.
class DomainMap {
 public:
  explicit DomainMap(const QuadratureDomain& d) : d_(d) {
    if (!(d.lower < d.upper)) throw DomainError("quadrature domain must have lower < upper");
    if (!(d.scale > 0.0)) throw DomainError("quadrature scale must be positive");
    lower_inf_ = std::isinf(d.lower);
    upper_inf_ = std::isinf(d.upper);
    center_ = std::clamp(d.center, d.lower, d.upper);
    if (!lower_inf_ && !upper_inf_) {
      t_lo_ = d.lower;
      t_hi_ = d.upper;
    } else if (lower_inf_ && upper_inf_) {
      t_lo_ = -1.0;
      t_hi_ = 1.0;
    } else {
      t_lo_ = 0.0;
      t_hi_ = 1.0;
    }
  }

  [[nodiscard]] double t_lo() const { return t_lo_; }
  [[nodiscard]] double t_hi() const { return t_hi_; }

  // Returns theta and writes log|dtheta/dt|.
  double to_theta(double t, double& log_jac) const {
    if (!lower_inf_ && !upper_inf_) {
      log_jac = 0.0;
      return t;
    }
    if (lower_inf_ && upper_inf_) {
      const double one_m = 1.0 - t * t;
      log_jac = std::log(d_.scale * (1.0 + t * t)) - 2.0 * std::log(one_m);
      return center_ + d_.scale * t / one_m;
    }
    const double one_m = 1.0 - t;
    log_jac = std::log(d_.scale) - 2.0 * std::log(one_m);
    const double u = d_.scale * t / one_m;
    return lower_inf_ ? d_.upper - u : d_.lower + u;
  }

  double to_t(double theta) const {
    if (!lower_inf_ && !upper_inf_) return theta;
    if (lower_inf_ && upper_inf_) {
      const double u = (theta - center_) / d_.scale;
      return 2.0 * u / (1.0 + std::sqrt(1.0 + 4.0 * u * u));
    }
    const double u = (lower_inf_ ? d_.upper - theta : theta - d_.lower) / d_.scale;
    return u / (1.0 + u);
  }

  [[nodiscard]] double center() const { return center_; }

 private:
  QuadratureDomain d_;
  bool lower_inf_ = false;
  bool upper_inf_ = false;
  double center_ = 0.0;
  double t_lo_ = 0.0;
  double t_hi_ = 0.0;
};

struct Segment {
  double a;
  double b;
  double result;  // integral of exp(g - shift)
  double error;
  friend bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }
};

class ShiftedIntegrator {
 public:
  ShiftedIntegrator(const std::function<double(double)>& loglik,
                    const std::function<double(double)>& log_weight, const DomainMap& map)
      : loglik_(loglik), log_weight_(log_weight), map_(map) {}

  double log_integrand(double t) const {
    double log_jac = 0.0;
    const double theta = map_.to_theta(t, log_jac);
    const double w = log_weight_(theta);
    if (w == -kInf) return -kInf;
    const double v = loglik_(theta) + w + log_jac;
    if (std::isnan(v) || v == kInf) throw NonFinite("integrand is not finite");
    return v;
  }

  // Raw log-integrand values at the 15 Kronrod nodes of [a, b].
  std::array<double, 15> nodes(double a, double b) const {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<double, 15> g{};
    g[7] = log_integrand(c);
    for (int j = 0; j < 7; ++j) {
      g[j] = log_integrand(c - h * kXgk[j]);
      g[14 - j] = log_integrand(c + h * kXgk[j]);
    }
    return g;
  }

  Segment integrate(double a, double b, const std::array<double, 15>& g, double shift) const {
    const double h = 0.5 * (b - a);
    std::array<double, 15> f{};
    for (int i = 0; i < 15; ++i) {
      f[i] = std::exp(g[i] - shift);
      if (!std::isfinite(f[i])) throw NonFinite("integrand overflow after max shift");
    }
    double kronrod = kWgk[7] * f[7];
    double gauss = kWg[3] * f[7];
    for (int j = 0; j < 7; ++j) {
      const double pair = f[j] + f[14 - j];
      kronrod += kWgk[j] * pair;
      if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= h;
    gauss *= h;
    return Segment{a, b, kronrod, std::abs(kronrod - gauss)};
  }

 private:
  const std::function<double(double)>& loglik_;
  const std::function<double(double)>& log_weight_;
  const DomainMap& map_;
};

double max_of(const std::array<double, 15>& g) { return *std::max_element(g.begin(), g.end()); }

}  // namespace

Region level_set(const LogLikelihoodFn& loglik, double threshold, double tolerance) {
  if (!(loglik.domain_lower <= loglik.mle && loglik.mle <= loglik.domain_upper)) {
    throw DomainError("level_set: MLE outside the parameter domain");
  }
  Region region;
  region.threshold = threshold;
  if (threshold >= loglik.max_value) {
    const double slack = 1e-10 * (1.0 + std::abs(loglik.max_value));
    if (threshold > loglik.max_value + slack) {
      throw ThresholdAboveMax("threshold log(eps) + log q_n exceeds the maximum log-likelihood");
    }
    region.interval = Interval(loglik.mle, loglik.mle);
    return region;
  }
  const double lo = find_endpoint(loglik, threshold, -1, tolerance, region.lower_truncated);
  const double hi = find_endpoint(loglik, threshold, +1, tolerance, region.upper_truncated);
  region.interval = Interval(std::min(lo, loglik.mle), std::max(hi, loglik.mle));
  return region;
}

Region robbins_region(const LogLikelihoodFn& loglik, const MixtureLogDensity& log_qn,
                      const PersistenceLevel& level, double tolerance) {
  return level_set(loglik, level.log_epsilon() + log_qn.value, tolerance);
}

double closed_form_half_width(double variance_proxy, double n, double estimate,
                              const NormalWeight& weight, const PersistenceLevel& level) {
  if (!(variance_proxy > 0.0) || !(n > 0.0)) {
    throw DomainError("closed_form_half_width: variance and sample size must be positive");
  }
  const double v = variance_proxy / n;
  const double total = weight.variance + v;
  const double d = estimate - weight.mean;
  const double radicand = std::log(total / v) + d * d / total - 2.0 * level.log_epsilon();
  return std::sqrt(v) * std::sqrt(radicand);
}

MixtureLogDensity laplace_log_mixture(double max_loglik, double weight_density_at_mle,
                                      double observed_info_at_mle, int dim) {
  if (!(weight_density_at_mle > 0.0)) throw DomainError("laplace: weight density must be positive");
  if (!(observed_info_at_mle > 0.0)) throw DomainError("laplace: observed information must be positive");
  if (dim < 1) throw DomainError("laplace: dimension must be positive");
  MixtureLogDensity out;
  out.method = MixtureLogDensity::Method::Laplace;
  out.value = max_loglik + std::log(weight_density_at_mle) + 0.5 * dim * kLog2Pi -
              0.5 * std::log(observed_info_at_mle);
  return out;
}

MixtureLogDensity quadrature_log_mixture(const std::function<double(double)>& loglik,
                                         const std::function<double(double)>& log_weight,
                                         const QuadratureDomain& domain, double rel_tolerance) {
  const DomainMap map(domain);
  const ShiftedIntegrator integrator(loglik, log_weight, map);

  // Initial partition: geometric breakpoints around the centre.
  std::vector<double> cuts = {map.t_lo(), map.t_hi()};
  for (double k : {0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
    for (double sgn : {-1.0, 1.0}) {
      const double theta = map.center() + sgn * k * domain.scale;
      if (theta <= domain.lower || theta >= domain.upper) continue;
      const double t = map.to_t(theta);
      if (t > map.t_lo() && t < map.t_hi()) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::array<double, 15>> first;
  double shift = -kInf;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    first.push_back(integrator.nodes(cuts[i], cuts[i + 1]));
    shift = std::max(shift, max_of(first.back()));
  }
  if (shift == -kInf) throw NonFinite("integrand vanishes on every initial node");

  std::priority_queue<Segment> queue;
  std::vector<Segment> settled;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Segment s = integrator.integrate(cuts[i], cuts[i + 1], first[i], shift);
    total += s.result;
    error += s.error;
    queue.push(s);
  }

  constexpr std::size_t kMaxSegments = 20000;
  std::size_t segments = queue.size();
  auto rescale = [&](double new_shift) {
    const double factor = std::exp(shift - new_shift);
    std::vector<Segment> items;
    while (!queue.empty()) {
      items.push_back(queue.top());
      queue.pop();
    }
    for (auto& s : items) {
      s.result *= factor;
      s.error *= factor;
      queue.push(s);
    }
    for (auto& s : settled) {
      s.result *= factor;
      s.error *= factor;
    }
    total *= factor;
    error *= factor;
    shift = new_shift;
  };

  while (error > rel_tolerance * total && !queue.empty() && segments < kMaxSegments) {
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      settled.push_back(worst);
      continue;
    }
    const auto left_nodes = integrator.nodes(worst.a, mid);
    const auto right_nodes = integrator.nodes(mid, worst.b);
    const double local_max = std::max(max_of(left_nodes), max_of(right_nodes));
    if (local_max > shift + 600.0) rescale(local_max);
    const Segment left = integrator.integrate(worst.a, mid, left_nodes, shift);
    const Segment right = integrator.integrate(mid, worst.b, right_nodes, shift);
    total += left.result + right.result - worst.result;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++segments;
  }
  // Re-sum to shed accumulated cancellation from the running updates.
  total = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    total += queue.top().result;
    error += queue.top().error;
    queue.pop();
  }
  for (const auto& s : settled) {
    total += s.result;
    error += s.error;
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw NonFinite("mixture integral is not positive");

  MixtureLogDensity out;
  out.method = MixtureLogDensity::Method::Quadrature;
  out.value = shift + std::log(total);
  out.abs_error = error / total;
  out.converged = error <= rel_tolerance * total;
  return out;
}

VilleEstimate verify_ville_inequality(const LogRatioFactory& make_process, double k,
                                      std::size_t n_max, std::size_t reps, std::uint64_t seed,
                                      int threads) {
  if (!(k > 0.0)) throw DomainError("ville: k must be positive");
  if (reps == 0 || n_max == 0) throw DomainError("ville: reps and n_max must be positive");
  const double log_k = std::log(k);
  std::vector<unsigned char> crossed(reps, 0);
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(reps);

#pragma omp parallel for schedule(dynamic, 16) num_threads(team)
  for (std::int64_t r = 0; r < count; ++r) {
    Rng rng = make_substream(seed, static_cast<std::uint64_t>(r));
    auto process = make_process();
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (process->advance(rng) >= log_k) {
        crossed[static_cast<std::size_t>(r)] = 1;
        break;
      }
    }
  }

  VilleEstimate est;
  est.k = k;
  est.reps = reps;
  for (auto c : crossed) est.crossings += c;
  est.probability = static_cast<double>(est.crossings) / static_cast<double>(reps);
  est.standard_error =
      std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(reps));
  return est;
}

}  // namespace robbins
