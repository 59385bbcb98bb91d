#include "robbins/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "robbins/bernoulli.hpp"
#include "robbins/normal.hpp"
#include "robbins/simulation.hpp"
#include "robbins/special.hpp"
#include "robbins/two_bernoulli.hpp"

#ifndef ROBBINS_DEFAULT_REFERENCE
#define ROBBINS_DEFAULT_REFERENCE ""
#endif

namespace robbins::cli {

namespace {

namespace sim = robbins::simulation;

/// Invalid command-line input; the message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& message)
      : std::runtime_error(flag + ": " + message) {}
};

struct Options {
  std::string model = "normal";
  std::string rule = "exact";
  std::string weight;
  std::string format;
  std::string out;
  std::string reference;
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  double ybar = 0.0;
  double sigma2 = 1.0;
  double epsilon = 0.2;
  double conf = 0.95;
  std::optional<double> theta;
  std::optional<double> theta2;
  double k = 0.0;
  std::size_t nmin = 0;
  std::size_t nmax = 0;
  std::size_t stride = 1;
  std::size_t reps = 10000;
  std::uint64_t seed = 42;
  int threads = 0;
  int id = 0;
};

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

enum class Model { Normal, Bernoulli, TwoBernoulli };

Model parse_model(const std::string& m) {
  if (m == "normal") return Model::Normal;
  if (m == "bernoulli") return Model::Bernoulli;
  if (m == "two-bernoulli") return Model::TwoBernoulli;
  throw UsageError("--model", "expected normal, bernoulli or two-bernoulli, got '" + m + "'");
}

sim::RuleKind parse_rule(const std::string& r) {
  if (r == "exact") return sim::RuleKind::RobbinsExact;
  if (r == "approx") return sim::RuleKind::RobbinsApprox;
  if (r == "classical" || r == "z" || r == "wald") return sim::RuleKind::ClassicalZ;
  if (r == "lr") return sim::RuleKind::LikelihoodRatio;
  throw UsageError("--rule", "expected exact, approx, classical or lr, got '" + r + "'");
}

PersistenceLevel parse_level(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("--epsilon", "must lie strictly between 0 and 1");
  return PersistenceLevel(eps);
}

void check_conf(double conf) {
  if (!(conf > 0.0 && conf < 1.0)) throw UsageError("--conf", "must lie strictly between 0 and 1");
}

WeightSpec default_weight(Model model, sim::RuleKind rule) {
  switch (model) {
    case Model::Normal:
      return NormalWeight{0.0, 1.0};
    case Model::Bernoulli:
      return BetaWeight{0.5, 0.5};
    case Model::TwoBernoulli:
      if (rule == sim::RuleKind::RobbinsExact) return LogOddsJeffreysInduced{};
      return NormalWeight{0.0, 2.0 * std::numbers::pi * std::numbers::pi};
  }
  return NormalWeight{0.0, 1.0};
}

WeightSpec resolve_weight(const Options& o, Model model, sim::RuleKind rule) {
  if (o.weight.empty()) return default_weight(model, rule);
  try {
    return parse_weight(o.weight);
  } catch (const std::exception& e) {
    throw UsageError("--weight", e.what());
  }
}

template <class W>
W weight_as(const WeightSpec& w, const char* expected) {
  if (const auto* p = std::get_if<W>(&w)) return *p;
  throw UsageError("--weight", std::string("this model and rule need a ") + expected + " weight");
}

// Printed result of the interval command.
struct IntervalResult {
  Interval interval;
  std::optional<double> threshold;  // log eps + log q_n, or the likelihood-ratio cutoff
  std::string threshold_kind = "log_epsilon_plus_log_qn";
  bool lower_truncated = false;
  bool upper_truncated = false;
};

// log eps + log q_n for the closed-form sequence with a normal likelihood
// proxy: q_n is the N(mu0, tau2 + v/n) density at the estimate.
double closed_form_threshold(double estimate, double v_over_n, const NormalWeight& w,
                             const PersistenceLevel& level) {
  return level.log_epsilon() + normal_log_density(estimate, w.mean, w.variance + v_over_n);
}

void need(bool given, const char* flag, const char* why) {
  if (!given) throw UsageError(flag, why);
}

IntervalResult compute_interval(const Options& o, const CLI::App& cmd, Model model,
                                sim::RuleKind rule, const WeightSpec& weight) {
  IntervalResult r;
  const bool robbins = rule == sim::RuleKind::RobbinsExact || rule == sim::RuleKind::RobbinsApprox;
  std::optional<PersistenceLevel> level;
  if (robbins) {
    level = parse_level(o.epsilon);
  } else {
    check_conf(o.conf);
  }

  switch (model) {
    case Model::Normal: {
      need(cmd.count("--n") > 0, "--n", "required for the normal model");
      need(cmd.count("--ybar") > 0, "--ybar", "required for the normal model");
      if (o.n == 0) throw UsageError("--n", "must be at least 1");
      if (!(o.sigma2 > 0.0)) throw UsageError("--sigma2", "must be positive");
      if (rule == sim::RuleKind::LikelihoodRatio) {
        throw UsageError("--rule", "the normal model supports exact, approx and classical");
      }
      if (rule == sim::RuleKind::ClassicalZ) {
        r.interval = normal::classical_interval({o.n, o.ybar}, o.sigma2, o.conf);
        r.threshold.reset();
        return r;
      }
      if (std::holds_alternative<NormalInverseGamma>(weight)) {
        if (rule != sim::RuleKind::RobbinsExact) {
          throw UsageError("--weight", "the nig weight goes with --rule exact");
        }
        // --sigma2 is the variance estimate here.
        const normal::NormalSuffStat st(o.n, o.ybar, o.sigma2);
        const auto nig = std::get<NormalInverseGamma>(weight);
        r.interval = normal::nig_profile_interval(st, nig, *level);
        r.threshold = level->log_epsilon() + normal::nig_log_marginal(st, nig);
        return r;
      }
      const auto w = weight_as<NormalWeight>(weight, "normal or nig");
      if (rule == sim::RuleKind::RobbinsExact) {
        const normal::NormalSuffStat st(o.n, o.ybar);
        r.interval = normal::robbins_interval_known_var(st, o.sigma2, w, *level);
        r.threshold =
            level->log_epsilon() + normal::known_var_log_mixture(st, o.sigma2, w).value;
      } else {
        const normal::NormalSuffStat st(o.n, o.ybar, o.sigma2);
        r.interval = normal::approx_interval_unknown_var(st, w, *level);
        r.threshold = closed_form_threshold(o.ybar, o.sigma2 / static_cast<double>(o.n), w, *level);
      }
      return r;
    }
    case Model::Bernoulli: {
      need(cmd.count("--n") > 0, "--n", "required for the bernoulli model");
      need(cmd.count("--s") > 0, "--s", "required for the bernoulli model");
      if (o.n == 0) throw UsageError("--n", "must be at least 1");
      if (o.s > o.n) throw UsageError("--s", "must not exceed --n");
      const bernoulli::BernoulliSuffStat st(o.n, o.s);
      switch (rule) {
        case sim::RuleKind::ClassicalZ:
          throw UsageError("--rule", "the bernoulli model supports exact, approx and lr");
        case sim::RuleKind::LikelihoodRatio: {
          const auto ll = bernoulli::binomial_loglik(st);
          r.interval = bernoulli::lr_interval(st, o.conf);
          r.threshold = ll.max_value - 0.5 * chi_square1_quantile(o.conf);
          r.threshold_kind = "max_loglik_minus_half_chi2";
          return r;
        }
        case sim::RuleKind::RobbinsExact: {
          const auto region =
              bernoulli::robbins_region_bernoulli(st, weight_as<BetaWeight>(weight, "beta"), *level);
          r.interval = region.interval;
          r.threshold = region.threshold;
          r.lower_truncated = region.lower_truncated;
          r.upper_truncated = region.upper_truncated;
          return r;
        }
        case sim::RuleKind::RobbinsApprox: {
          const NormalWeight w = std::holds_alternative<BetaWeight>(weight)
                                     ? bernoulli::matched_omega_weight(std::get<BetaWeight>(weight))
                                     : weight_as<NormalWeight>(weight, "beta or normal");
          r.interval = bernoulli::arcsine_approx_interval(st, w, *level);
          r.threshold = closed_form_threshold(bernoulli::omega(st.mle()),
                                              0.25 / static_cast<double>(o.n), w, *level);
          return r;
        }
      }
      break;
    }
    case Model::TwoBernoulli: {
      for (const char* flag : {"--n1", "--n2", "--s1", "--s2"}) {
        need(cmd.count(flag) > 0, flag, "required for the two-bernoulli model");
      }
      if (o.n1 == 0) throw UsageError("--n1", "must be at least 1");
      if (o.n2 == 0) throw UsageError("--n2", "must be at least 1");
      if (o.s1 > o.n1) throw UsageError("--s1", "must not exceed --n1");
      if (o.s2 > o.n2) throw UsageError("--s2", "must not exceed --n2");
      const two_bernoulli::TwoSampleStat st(o.n1, o.n2, o.s1, o.s2);
      switch (rule) {
        case sim::RuleKind::LikelihoodRatio:
          throw UsageError("--rule", "the two-bernoulli model supports exact, approx and wald");
        case sim::RuleKind::ClassicalZ:
          r.interval = two_bernoulli::wald_interval_log_odds(st, o.conf);
          return r;
        case sim::RuleKind::RobbinsExact: {
          weight_as<LogOddsJeffreysInduced>(weight, "logodds");
          const auto region = two_bernoulli::robbins_conditional_interval(st, *level);
          r.interval = region.interval;
          r.threshold = region.threshold;
          r.lower_truncated = region.lower_unbounded;
          r.upper_truncated = region.upper_unbounded;
          return r;
        }
        case sim::RuleKind::RobbinsApprox: {
          const auto w = weight_as<NormalWeight>(weight, "normal");
          const auto est = two_bernoulli::continuity_corrected_estimates(st);
          r.interval = two_bernoulli::approx_interval_log_odds(st, w, *level);
          r.threshold = closed_form_threshold(est.psi_hat, est.variance, w, *level);
          return r;
        }
      }
      break;
    }
  }
  return r;
}

std::string rule_name(sim::RuleKind r) {
  switch (r) {
    case sim::RuleKind::ClassicalZ:
      return "classical";
    case sim::RuleKind::LikelihoodRatio:
      return "lr";
    case sim::RuleKind::RobbinsExact:
      return "exact";
    case sim::RuleKind::RobbinsApprox:
      return "approx";
  }
  return "";
}

// Writes to --out when given, otherwise to `out`.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot open --out file '" + o.out + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + o.out + "'");
}

int cmd_interval(const Options& o, const CLI::App& cmd, std::ostream& out) {
  const Model model = parse_model(o.model);
  const auto rule = parse_rule(o.rule);
  const bool robbins = rule == sim::RuleKind::RobbinsExact || rule == sim::RuleKind::RobbinsApprox;
  if (!robbins && cmd.count("--epsilon") > 0) {
    throw UsageError("--epsilon", "only applies to the exact and approx rules (use --conf)");
  }
  if (robbins && cmd.count("--conf") > 0) {
    throw UsageError("--conf", "only applies to the classical and lr rules (use --epsilon)");
  }
  const WeightSpec weight = resolve_weight(o, model, rule);
  const IntervalResult r = compute_interval(o, cmd, model, rule, weight);
  const std::string format = o.format.empty() ? "plain" : o.format;

  std::ostringstream os;
  if (format == "plain") {
    os << fixed4(r.interval.lower) << ' ' << fixed4(r.interval.upper) << '\n';
    os << "threshold: " << (r.threshold ? full(*r.threshold) : std::string("none")) << '\n';
    os << "model: " << o.model << "\nrule: " << rule_name(rule) << '\n';
    if (robbins) {
      os << "weight: " << to_string(weight) << "\nepsilon: " << o.epsilon << '\n';
    } else {
      os << "conf: " << o.conf << '\n';
    }
    if (r.lower_truncated || r.upper_truncated) {
      os << "truncated: " << (r.lower_truncated ? "lower" : "")
         << (r.lower_truncated && r.upper_truncated ? "," : "") << (r.upper_truncated ? "upper" : "")
         << '\n';
    }
  } else if (format == "json") {
    nlohmann::json j = {{"lower", r.interval.lower},
                        {"upper", r.interval.upper},
                        {"model", o.model},
                        {"rule", rule_name(rule)},
                        {"lower_truncated", r.lower_truncated},
                        {"upper_truncated", r.upper_truncated}};
    j["threshold"] = r.threshold ? nlohmann::json(*r.threshold) : nlohmann::json(nullptr);
    if (robbins) {
      j["weight"] = to_string(weight);
      j["epsilon"] = o.epsilon;
    } else {
      j["conf"] = o.conf;
    }
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "lower,upper,threshold,model,rule,level\n"
       << full(r.interval.lower) << ',' << full(r.interval.upper) << ','
       << (r.threshold ? full(*r.threshold) : std::string()) << ',' << o.model << ','
       << rule_name(rule) << ',' << (robbins ? 1.0 - o.epsilon : o.conf) << '\n';
  } else {
    throw UsageError("--format", "expected csv, json or plain");
  }
  emit(o, os.str(), out);
  return 0;
}

std::string render_report(const sim::TableReport& report, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    sim::write_csv(report, os);
  } else if (format == "json") {
    os << sim::to_json(report) << '\n';
  } else if (format == "plain") {
    for (const auto& r : report.rows) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%-4s %-28s %6.4g  contra %7.2f%% (se %.2f)  noncov %7.2f%% (se %.2f)\n",
                    r.table.c_str(), r.row_label.c_str(), r.level, r.contradictions_pct,
                    r.se_contra, r.noncoverages_pct, r.se_noncov);
      os << buf;
    }
  } else {
    throw UsageError("--format", "expected csv, json or plain");
  }
  return os.str();
}

void check_run_counts(const Options& o) {
  if (o.reps == 0) throw UsageError("--reps", "must be at least 1");
  if (o.threads < 0) throw UsageError("--threads", "must be non-negative");
}

int cmd_simulate(const Options& o, const CLI::App& cmd, std::ostream& out) {
  check_run_counts(o);
  const Model model = parse_model(o.model);
  const auto rule_kind = parse_rule(o.rule);
  sim::SequencePlan plan;
  plan.reps = o.reps;
  plan.seed = o.seed;
  plan.stride = o.stride;
  if (o.stride == 0) throw UsageError("--stride", "must be at least 1");
  switch (model) {
    case Model::Normal:
      plan.model = sim::ModelKind::NormalKnownVar;
      plan.truth.theta = o.theta.value_or(0.0);
      plan.truth.sigma0_sq = o.sigma2;
      if (!(o.sigma2 > 0.0)) throw UsageError("--sigma2", "must be positive");
      plan.n_min = 10;
      plan.n_max = 4000;
      break;
    case Model::Bernoulli:
      plan.model = sim::ModelKind::Bernoulli;
      plan.truth.theta = o.theta.value_or(0.5);
      if (!(plan.truth.theta > 0.0 && plan.truth.theta < 1.0)) {
        throw UsageError("--theta", "must lie strictly between 0 and 1");
      }
      plan.n_min = 100;
      plan.n_max = 4000;
      break;
    case Model::TwoBernoulli:
      plan.model = sim::ModelKind::TwoBernoulli;
      plan.truth.theta = o.theta.value_or(0.2);
      plan.truth.theta2 = o.theta2.value_or(0.25);
      if (!(plan.truth.theta > 0.0 && plan.truth.theta < 1.0)) {
        throw UsageError("--theta", "must lie strictly between 0 and 1");
      }
      if (!(plan.truth.theta2 > 0.0 && plan.truth.theta2 < 1.0)) {
        throw UsageError("--theta2", "must lie strictly between 0 and 1");
      }
      plan.n_min = 50;
      plan.n_max = 2000;
      break;
  }
  if (cmd.count("--nmin") > 0) plan.n_min = o.nmin;
  if (cmd.count("--nmax") > 0) plan.n_max = o.nmax;
  if (plan.n_min == 0) throw UsageError("--nmin", "must be at least 1");
  if (plan.n_min > plan.n_max) throw UsageError("--nmax", "must be at least --nmin");

  switch (rule_kind) {
    case sim::RuleKind::ClassicalZ:
      check_conf(o.conf);
      plan.rule = sim::RuleSpec::classical(o.conf);
      break;
    case sim::RuleKind::LikelihoodRatio:
      check_conf(o.conf);
      plan.rule = sim::RuleSpec::likelihood_ratio(o.conf);
      break;
    case sim::RuleKind::RobbinsExact:
      parse_level(o.epsilon);
      plan.rule = sim::RuleSpec::robbins_exact(o.epsilon, resolve_weight(o, model, rule_kind));
      break;
    case sim::RuleKind::RobbinsApprox:
      parse_level(o.epsilon);
      plan.rule = sim::RuleSpec::robbins_approx(o.epsilon, resolve_weight(o, model, rule_kind));
      break;
  }
  try {
    sim::Batch b;
    b.model = plan.model;
    b.truth = plan.truth;
    b.rules = {plan.rule};
    b.n_min = plan.n_min;
    b.n_max = plan.n_max;
    b.stride = plan.stride;
    b.reps = plan.reps;
    sim::validate(b);
  } catch (const DomainError& e) {
    throw UsageError("--rule", e.what());
  }
  sim::TableReport report;
  auto row = sim::run_plan(plan, o.threads);
  row.table = "sim";
  row.row_label = o.model + ":" + rule_name(rule_kind) +
                  (plan.rule.weight ? ":" + to_string(*plan.rule.weight) : std::string());
  report.rows.push_back(row);
  emit(o, render_report(report, o.format.empty() ? "plain" : o.format), out);
  return 0;
}

int cmd_reproduce(const Options& o, const CLI::App& cmd, std::ostream& out, std::ostream& err) {
  check_run_counts(o);
  if (o.id < 1 || o.id > 5) throw UsageError("--id", "table id must be 1, 2, 3, 4 or 5");
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "csv" && format != "json" && format != "plain") {
    throw UsageError("--format", "expected csv, json or plain");
  }
  const auto report = sim::reproduce_table(o.id, o.reps, o.seed, o.threads);
  emit(o, render_report(report, format), out);

  const bool explicit_ref = cmd.count("--reference") > 0;
  const std::string path = explicit_ref ? o.reference : std::string(ROBBINS_DEFAULT_REFERENCE);
  std::ostream& summary = o.out.empty() ? err : out;
  summary << "# table T" << o.id << ": reps=" << o.reps << " seed=" << o.seed << '\n';
  if (path.empty()) return 0;
  std::ifstream in(path);
  if (!in) {
    if (explicit_ref) throw std::runtime_error("cannot open --reference file '" + path + "'");
    return 0;
  }
  const auto comparisons = sim::compare_to_reference(report, sim::read_reference(in));
  double max_c = 0.0;
  double max_n = 0.0;
  std::size_t within = 0;
  for (const auto& c : comparisons) {
    max_c = std::max(max_c, std::abs(c.diff_contra()));
    max_n = std::max(max_n, std::abs(c.diff_noncov()));
    within += c.within(3.0) ? 1 : 0;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "# vs reference: cells=%zu max|diff| contradictions=%.2f noncoverages=%.2f "
                "within 3 SE: %zu/%zu\n",
                comparisons.size(), max_c, max_n, within, comparisons.size());
  summary << buf;
  return 0;
}

int cmd_ville(const Options& o, const CLI::App& cmd, std::ostream& out) {
  check_run_counts(o);
  if (!(o.k > 1.0)) throw UsageError("--k", "must exceed 1 for a meaningful bound");
  const Model model = parse_model(o.model);
  const std::size_t n_max = cmd.count("--nmax") > 0 ? o.nmax : 1000;
  if (n_max == 0) throw UsageError("--nmax", "must be at least 1");
  LogRatioFactory factory;
  switch (model) {
    case Model::Normal: {
      if (!(o.sigma2 > 0.0)) throw UsageError("--sigma2", "must be positive");
      const auto w = weight_as<NormalWeight>(resolve_weight(o, model, sim::RuleKind::RobbinsExact),
                                             "normal");
      const double theta = o.theta.value_or(0.0);
      const double s2 = o.sigma2;
      factory = [theta, s2, w] { return normal::make_ratio_process(theta, s2, w); };
      break;
    }
    case Model::Bernoulli: {
      const auto w =
          weight_as<BetaWeight>(resolve_weight(o, model, sim::RuleKind::RobbinsExact), "beta");
      const double theta = o.theta.value_or(0.5);
      if (!(theta > 0.0 && theta < 1.0)) {
        throw UsageError("--theta", "must lie strictly between 0 and 1");
      }
      factory = [theta, w] { return bernoulli::make_ratio_process(theta, w); };
      break;
    }
    case Model::TwoBernoulli:
      throw UsageError("--model", "ville-check supports normal and bernoulli");
  }
  const auto est = verify_ville_inequality(factory, o.k, n_max, o.reps, o.seed, o.threads);
  char buf[256];
  std::snprintf(buf, sizeof buf, "estimate: %.6f (se %.6f)\nbound: %.6f\n", est.probability,
                est.standard_error, est.bound());
  std::ostringstream os;
  os << buf << "model: " << o.model << "\nk: " << o.k << "\nnmax: " << n_max
     << "\nreps: " << o.reps << "\nseed: " << o.seed << '\n'
     << (est.within_bound() ? "PASS" : "FAIL") << '\n';
  emit(o, os.str(), out);
  return est.within_bound() ? 0 : 1;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("ROBBINS_SEED");
  if (env == nullptr || *env == '\0') return 42;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("ROBBINS_SEED", "must be a non-negative integer");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.seed = default_seed();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Robbins confidence sequences: intervals, simulations and checks"};
  app.set_config("--config", "", "TOML/INI file with option values; flags override it");
  app.require_subcommand(1);

  auto* interval = app.add_subcommand("interval", "compute one interval from summary data");
  auto* simulate = app.add_subcommand("simulate", "run one Monte Carlo sequence plan");
  auto* reproduce = app.add_subcommand("reproduce-table", "rerun one of the five tables");
  auto* ville = app.add_subcommand("ville-check", "Monte Carlo check of the Ville inequality");

  auto add_common = [&o](CLI::App* c) {
    c->add_option("--model", o.model, "normal | bernoulli | two-bernoulli")->capture_default_str();
    c->add_option("--weight", o.weight, "normal:mu,tau2 | beta:a,b | nig:mu,kappa,alpha,beta | logodds");
    c->add_option("--epsilon", o.epsilon, "1 - persistence level")->capture_default_str();
    c->add_option("--format", o.format, "csv | json | plain");
    c->add_option("--out", o.out, "output file");
  };
  auto add_run = [&o](CLI::App* c) {
    c->add_option("--reps", o.reps, "replications")->capture_default_str();
    c->add_option("--seed", o.seed, "base seed (default from ROBBINS_SEED, else 42)")
        ->capture_default_str();
    c->add_option("--threads", o.threads, "worker threads (0 = all available)");
  };

  add_common(interval);
  interval->add_option("--rule", o.rule, "exact | approx | classical | lr")->capture_default_str();
  interval->add_option("--conf", o.conf, "confidence for classical and lr rules")->capture_default_str();
  interval->add_option("--n", o.n, "sample size");
  interval->add_option("--s", o.s, "successes");
  interval->add_option("--ybar", o.ybar, "sample mean");
  interval->add_option("--sigma2", o.sigma2, "known variance, or variance estimate with nig/approx")
      ->capture_default_str();
  interval->add_option("--n1", o.n1, "first sample size");
  interval->add_option("--n2", o.n2, "second sample size");
  interval->add_option("--s1", o.s1, "first sample successes");
  interval->add_option("--s2", o.s2, "second sample successes");

  add_common(simulate);
  add_run(simulate);
  simulate->add_option("--rule", o.rule, "exact | approx | classical | lr")->capture_default_str();
  simulate->add_option("--conf", o.conf, "confidence for classical and lr rules")->capture_default_str();
  simulate->add_option("--theta", o.theta, "true mean or proportion");
  simulate->add_option("--theta2", o.theta2, "second true proportion");
  simulate->add_option("--sigma2", o.sigma2, "known variance")->capture_default_str();
  simulate->add_option("--nmin", o.nmin, "first monitored sample size");
  simulate->add_option("--nmax", o.nmax, "last monitored sample size");
  simulate->add_option("--stride", o.stride, "monitor every stride-th n")->capture_default_str();

  add_run(reproduce);
  reproduce->add_option("--id", o.id, "table id 1..5")->required();
  reproduce->add_option("--format", o.format, "csv | json | plain");
  reproduce->add_option("--out", o.out, "output file");
  reproduce->add_option("--reference", o.reference, "CSV of reference cells to compare against");

  add_common(ville);
  add_run(ville);
  ville->add_option("--k", o.k, "crossing level (> 1)")->required();
  ville->add_option("--theta", o.theta, "true mean or proportion");
  ville->add_option("--sigma2", o.sigma2, "known variance")->capture_default_str();
  ville->add_option("--nmax", o.nmax, "horizon (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*interval) return cmd_interval(o, *interval, out);
    if (*simulate) return cmd_simulate(o, *simulate, out);
    if (*reproduce) return cmd_reproduce(o, *reproduce, out, err);
    if (*ville) return cmd_ville(o, *ville, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace robbins::cli
