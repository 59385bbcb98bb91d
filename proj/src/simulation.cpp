#include "robbins/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include <omp.h>

#include "robbins/bernoulli.hpp"
#include "robbins/normal.hpp"
#include "robbins/special.hpp"
#include "robbins/two_bernoulli.hpp"

namespace robbins::simulation {

double true_parameter(ModelKind model, const Truth& truth) {
  return model == ModelKind::TwoBernoulli ? two_bernoulli::log_odds_ratio(truth.theta, truth.theta2)
                                          : truth.theta;
}

RuleSpec RuleSpec::classical(double confidence) {
  RuleSpec r;
  r.kind = RuleKind::ClassicalZ;
  r.confidence = confidence;
  return r;
}

RuleSpec RuleSpec::likelihood_ratio(double confidence) {
  RuleSpec r;
  r.kind = RuleKind::LikelihoodRatio;
  r.confidence = confidence;
  return r;
}

RuleSpec RuleSpec::robbins_exact(double epsilon, WeightSpec weight) {
  RuleSpec r;
  r.kind = RuleKind::RobbinsExact;
  r.level = PersistenceLevel(epsilon);
  r.weight = std::move(weight);
  return r;
}

RuleSpec RuleSpec::robbins_approx(double epsilon, WeightSpec weight) {
  RuleSpec r;
  r.kind = RuleKind::RobbinsApprox;
  r.level = PersistenceLevel(epsilon);
  r.weight = std::move(weight);
  return r;
}

double RuleSpec::nominal_level() const {
  return level ? level->persistence() : confidence;
}

namespace {

// Sufficient statistics of one growing sample.
struct RunningStat {
  std::size_t n = 0;
  double mean = 0.0;  // Welford running mean and sum of squared deviations
  double m2 = 0.0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
};

struct Replication {
  Rng rng;
  std::normal_distribution<double> gauss{0.0, 1.0};
  RunningStat stat;
};

enum class Eval {
  NormalZ,
  NormalExact,
  NormalProfile,
  NormalApprox,
  BernoulliLR,
  BernoulliExact,
  BernoulliArcsine,
  TwoWald,
  TwoApprox,
  TwoExact,
};

struct CompiledRule {
  Eval eval = Eval::NormalZ;
  double confidence = 0.0;
  double sigma0_sq = 1.0;
  double critical = 0.0;  // z_{(1+conf)/2}, computed once per rule
  std::optional<PersistenceLevel> level;
  std::optional<NormalWeight> normal;
  std::optional<BetaWeight> beta;
  std::optional<NormalInverseGamma> nig;

  // Intervals that depend on the data only through (n, s1).
  [[nodiscard]] bool keyed_by_count() const {
    return eval == Eval::BernoulliLR || eval == Eval::BernoulliExact ||
           eval == Eval::BernoulliArcsine;
  }
};

[[noreturn]] void unsupported(const char* what) {
  throw DomainError(std::string("unsupported rule for this model: ") + what);
}

template <class W>
W require_weight(const RuleSpec& rule, const char* what) {
  if (!rule.weight) unsupported(what);
  if (const auto* w = std::get_if<W>(&*rule.weight)) return *w;
  unsupported(what);
}

void require_confidence(double c) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("rule confidence must lie in (0, 1)");
}

CompiledRule compile(const RuleSpec& rule, ModelKind model, const Truth& truth) {
  CompiledRule c;
  c.sigma0_sq = truth.sigma0_sq;
  c.confidence = rule.confidence;
  c.level = rule.level;
  const bool robbins = rule.kind == RuleKind::RobbinsExact || rule.kind == RuleKind::RobbinsApprox;
  if (robbins && !rule.level) throw DomainError("Robbins rules need a persistence level");
  if (!robbins) {
    require_confidence(rule.confidence);
    c.critical = normal_critical_value(rule.confidence);
  }

  switch (model) {
    case ModelKind::NormalKnownVar:
      switch (rule.kind) {
        case RuleKind::ClassicalZ:
          c.eval = Eval::NormalZ;
          break;
        case RuleKind::LikelihoodRatio:
          unsupported("likelihood-ratio interval for the normal model (use classical)");
        case RuleKind::RobbinsExact:
          if (rule.weight && std::holds_alternative<NormalInverseGamma>(*rule.weight)) {
            c.eval = Eval::NormalProfile;
            c.nig = std::get<NormalInverseGamma>(*rule.weight);
          } else {
            c.eval = Eval::NormalExact;
            c.normal = require_weight<NormalWeight>(rule, "normal exact rule needs a normal or nig weight");
          }
          break;
        case RuleKind::RobbinsApprox:
          c.eval = Eval::NormalApprox;
          c.normal = require_weight<NormalWeight>(rule, "normal approximate rule needs a normal weight");
          break;
      }
      break;
    case ModelKind::Bernoulli:
      switch (rule.kind) {
        case RuleKind::ClassicalZ:
          unsupported("classical z interval for the Bernoulli model (use likelihood ratio)");
        case RuleKind::LikelihoodRatio:
          c.eval = Eval::BernoulliLR;
          break;
        case RuleKind::RobbinsExact:
          c.eval = Eval::BernoulliExact;
          c.beta = require_weight<BetaWeight>(rule, "Bernoulli exact rule needs a beta weight");
          break;
        case RuleKind::RobbinsApprox:
          c.eval = Eval::BernoulliArcsine;
          if (rule.weight && std::holds_alternative<BetaWeight>(*rule.weight)) {
            c.normal = bernoulli::matched_omega_weight(std::get<BetaWeight>(*rule.weight));
          } else {
            c.normal = require_weight<NormalWeight>(rule, "arcsine rule needs a normal or beta weight");
          }
          break;
      }
      break;
    case ModelKind::TwoBernoulli:
      switch (rule.kind) {
        case RuleKind::ClassicalZ:
          c.eval = Eval::TwoWald;
          break;
        case RuleKind::LikelihoodRatio:
          unsupported("likelihood-ratio interval for the log-odds model");
        case RuleKind::RobbinsExact:
          c.eval = Eval::TwoExact;
          require_weight<LogOddsJeffreysInduced>(rule, "conditional rule needs the logodds weight");
          break;
        case RuleKind::RobbinsApprox:
          c.eval = Eval::TwoApprox;
          c.normal = require_weight<NormalWeight>(rule, "log-odds approximate rule needs a normal weight");
          break;
      }
      break;
  }
  return c;
}

Interval evaluate(const CompiledRule& rule, const RunningStat& st) {
  switch (rule.eval) {
    case Eval::NormalZ: {
      // Same arithmetic as normal::classical_interval with the quantile hoisted.
      const double half = std::sqrt(rule.sigma0_sq / static_cast<double>(st.n)) * rule.critical;
      return {st.mean - half, st.mean + half};
    }
    case Eval::NormalExact:
      return normal::robbins_interval_known_var({st.n, st.mean}, rule.sigma0_sq, *rule.normal,
                                                *rule.level);
    case Eval::NormalProfile:
      return normal::nig_profile_interval({st.n, st.mean, st.m2 / static_cast<double>(st.n)},
                                          *rule.nig, *rule.level);
    case Eval::NormalApprox:
      return normal::approx_interval_unknown_var(
          {st.n, st.mean, st.m2 / static_cast<double>(st.n)}, *rule.normal, *rule.level);
    case Eval::BernoulliLR:
      return bernoulli::lr_interval({st.n, st.s1}, rule.confidence);
    case Eval::BernoulliExact:
      return bernoulli::robbins_interval_bernoulli({st.n, st.s1}, *rule.beta, *rule.level);
    case Eval::BernoulliArcsine:
      return bernoulli::arcsine_approx_interval({st.n, st.s1}, *rule.normal, *rule.level);
    case Eval::TwoWald: {
      // Same arithmetic as two_bernoulli::wald_interval_log_odds with the quantile hoisted.
      const auto est = two_bernoulli::continuity_corrected_estimates({st.n, st.n, st.s1, st.s2});
      const double half = rule.critical * std::sqrt(est.variance);
      return {est.psi_hat - half, est.psi_hat + half};
    }
    case Eval::TwoApprox:
      return two_bernoulli::approx_interval_log_odds({st.n, st.n, st.s1, st.s2}, *rule.normal,
                                                     *rule.level);
    case Eval::TwoExact:
      return two_bernoulli::robbins_conditional_interval({st.n, st.n, st.s1, st.s2}, *rule.level)
          .interval;
  }
  return {};
}

class Sampler {
 public:
  Sampler(ModelKind model, const Truth& truth)
      : model_(model), truth_(truth), sigma_(std::sqrt(truth.sigma0_sq)) {}

  void advance(Replication& rep) const {
    RunningStat& st = rep.stat;
    ++st.n;
    switch (model_) {
      case ModelKind::NormalKnownVar: {
        const double y = truth_.theta + sigma_ * rep.gauss(rep.rng);
        const double delta = y - st.mean;
        st.mean += delta / static_cast<double>(st.n);
        st.m2 += delta * (y - st.mean);
        break;
      }
      case ModelKind::Bernoulli:
        st.s1 += uniform01(rep.rng) < truth_.theta ? 1 : 0;
        break;
      case ModelKind::TwoBernoulli:
        st.s1 += uniform01(rep.rng) < truth_.theta ? 1 : 0;
        st.s2 += uniform01(rep.rng) < truth_.theta2 ? 1 : 0;
        break;
    }
  }

 private:
  ModelKind model_;
  Truth truth_;
  double sigma_;
};

bool monitored(const Batch& b, std::size_t n) {
  if (n < b.n_min || n > b.n_max) return false;
  return n == b.n_max || (n - b.n_min) % b.stride == 0;
}

std::vector<CompiledRule> compile_all(const Batch& batch) {
  std::vector<CompiledRule> rules;
  rules.reserve(batch.rules.size());
  for (const auto& r : batch.rules) rules.push_back(compile(r, batch.model, batch.truth));
  return rules;
}

}  // namespace

void validate(const Batch& batch) {
  if (batch.rules.empty()) throw DomainError("batch has no rules");
  if (batch.n_min == 0 || batch.n_min > batch.n_max) {
    throw DomainError("monitoring range needs 1 <= n_min <= n_max");
  }
  if (batch.reps == 0) throw DomainError("reps must be at least 1");
  if (batch.stride == 0) throw DomainError("stride must be at least 1");
  switch (batch.model) {
    case ModelKind::NormalKnownVar:
      if (!(batch.truth.sigma0_sq > 0.0)) throw DomainError("sigma0^2 must be positive");
      break;
    case ModelKind::Bernoulli:
      if (!(batch.truth.theta > 0.0 && batch.truth.theta < 1.0)) {
        throw DomainError("Bernoulli theta must lie in (0, 1)");
      }
      break;
    case ModelKind::TwoBernoulli:
      true_parameter(batch.model, batch.truth);
      break;
  }
  for (const auto& r : batch.rules) {
    const auto c = compile(r, batch.model, batch.truth);
    if ((c.eval == Eval::NormalApprox || c.eval == Eval::NormalProfile) && batch.n_min < 2) {
      throw DomainError("estimated-variance rules need n_min >= 2");
    }
  }
}

std::vector<CellTally> run_batch(const Batch& batch, int threads) {
  validate(batch);
  const auto rules = compile_all(batch);
  const Sampler sampler(batch.model, batch.truth);
  const double truth = true_parameter(batch.model, batch.truth);
  const std::size_t reps = batch.reps;
  const auto count = static_cast<std::int64_t>(reps);
  const int team = threads > 0 ? threads : omp_get_max_threads();

  std::vector<Replication> pool(reps);
  std::vector<SequenceMonitor> monitors(rules.size() * reps, SequenceMonitor(truth));
  std::vector<Interval> cache;
  std::vector<std::size_t> distinct;
  std::vector<unsigned char> seen;

#pragma omp parallel for num_threads(team)
  for (std::int64_t r = 0; r < count; ++r) {
    pool[static_cast<std::size_t>(r)].rng = make_substream(batch.seed, static_cast<std::uint64_t>(r));
  }

  for (std::size_t n = 1; n <= batch.n_max; ++n) {
#pragma omp parallel for num_threads(team)
    for (std::int64_t r = 0; r < count; ++r) sampler.advance(pool[static_cast<std::size_t>(r)]);
    if (!monitored(batch, n)) continue;

    for (std::size_t j = 0; j < rules.size(); ++j) {
      const CompiledRule& rule = rules[j];
      SequenceMonitor* mon = monitors.data() + j * reps;
      if (rule.keyed_by_count()) {
        std::size_t s_min = n;
        std::size_t s_max = 0;
        for (const auto& rep : pool) {
          s_min = std::min(s_min, rep.stat.s1);
          s_max = std::max(s_max, rep.stat.s1);
        }
        seen.assign(s_max - s_min + 1, 0);
        for (const auto& rep : pool) seen[rep.stat.s1 - s_min] = 1;
        distinct.clear();
        for (std::size_t k = 0; k < seen.size(); ++k) {
          if (seen[k]) distinct.push_back(s_min + k);
        }
        cache.assign(seen.size(), Interval{});
        const auto m = static_cast<std::int64_t>(distinct.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
        for (std::int64_t i = 0; i < m; ++i) {
          RunningStat st;
          st.n = n;
          st.s1 = distinct[static_cast<std::size_t>(i)];
          cache[st.s1 - s_min] = evaluate(rule, st);
        }
#pragma omp parallel for num_threads(team)
        for (std::int64_t r = 0; r < count; ++r) {
          const auto idx = static_cast<std::size_t>(r);
          mon[idx].update(cache[pool[idx].stat.s1 - s_min]);
        }
      } else {
#pragma omp parallel for schedule(static) num_threads(team)
        for (std::int64_t r = 0; r < count; ++r) {
          const auto idx = static_cast<std::size_t>(r);
          mon[idx].update(evaluate(rule, pool[idx].stat));
        }
      }
    }
  }

  std::vector<CellTally> tallies(rules.size());
  for (std::size_t j = 0; j < rules.size(); ++j) {
    tallies[j].reps = reps;
    for (std::size_t r = 0; r < reps; ++r) {
      const auto& m = monitors[j * reps + r];
      tallies[j].contradictions += m.contradicted() ? 1 : 0;
      tallies[j].noncoverages += m.noncovered() ? 1 : 0;
    }
  }
  return tallies;
}

std::vector<CellTally> run_batch_reference(const Batch& batch) {
  validate(batch);
  const auto rules = compile_all(batch);
  const Sampler sampler(batch.model, batch.truth);
  const double truth = true_parameter(batch.model, batch.truth);
  std::vector<CellTally> tallies(rules.size());
  for (auto& t : tallies) t.reps = batch.reps;

  for (std::size_t r = 0; r < batch.reps; ++r) {
    Replication rep;
    rep.rng = make_substream(batch.seed, r);
    std::vector<SequenceMonitor> monitors(rules.size(), SequenceMonitor(truth));
    for (std::size_t n = 1; n <= batch.n_max; ++n) {
      sampler.advance(rep);
      if (!monitored(batch, n)) continue;
      for (std::size_t j = 0; j < rules.size(); ++j) monitors[j].update(evaluate(rules[j], rep.stat));
    }
    for (std::size_t j = 0; j < rules.size(); ++j) {
      tallies[j].contradictions += monitors[j].contradicted() ? 1 : 0;
      tallies[j].noncoverages += monitors[j].noncovered() ? 1 : 0;
    }
  }
  return tallies;
}

TableRow make_row(const std::string& table, const std::string& row_label, double level,
                  const CellTally& tally, const Batch& batch) {
  const double reps = static_cast<double>(tally.reps);
  const double pc = static_cast<double>(tally.contradictions) / reps;
  const double pn = static_cast<double>(tally.noncoverages) / reps;
  TableRow row;
  row.table = table;
  row.row_label = row_label;
  row.level = level;
  row.contradictions_pct = 100.0 * pc;
  row.noncoverages_pct = 100.0 * pn;
  row.se_contra = 100.0 * std::sqrt(pc * (1.0 - pc) / reps);
  row.se_noncov = 100.0 * std::sqrt(pn * (1.0 - pn) / reps);
  row.reps = tally.reps;
  row.n_min = batch.n_min;
  row.n_max = batch.n_max;
  row.seed = batch.seed;
  return row;
}

TableRow run_plan(const SequencePlan& plan, int threads) {
  Batch batch;
  batch.model = plan.model;
  batch.truth = plan.truth;
  batch.rules = {plan.rule};
  batch.n_min = plan.n_min;
  batch.n_max = plan.n_max;
  batch.stride = plan.stride;
  batch.reps = plan.reps;
  batch.seed = plan.seed;
  const auto tallies = run_batch(batch, threads);
  return make_row("plan", "plan", plan.rule.nominal_level(), tallies.front(), batch);
}

namespace {

const std::vector<double> kEpsilons = {0.5, 0.2, 0.1, 0.05};
const std::vector<double> kConfidences = {0.90, 0.95, 0.99, 0.995};

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::vector<TableBatch> table_layout(int table_id, std::size_t reps, std::uint64_t seed) {
  std::vector<TableBatch> out;
  auto base = [&](ModelKind model, Truth truth, std::size_t n_min, std::size_t n_max) {
    TableBatch tb;
    tb.batch.model = model;
    tb.batch.truth = truth;
    tb.batch.n_min = n_min;
    tb.batch.n_max = n_max;
    tb.batch.reps = reps;
    tb.batch.seed = seed;
    return tb;
  };
  switch (table_id) {
    case 1: {
      auto tb = base(ModelKind::NormalKnownVar, Truth{0.0, 0.0, 1.0}, 10, 4000);
      for (double c : kConfidences) {
        tb.batch.rules.push_back(RuleSpec::classical(c));
        tb.row_labels.push_back("classical");
      }
      out.push_back(std::move(tb));
      break;
    }
    case 2: {
      auto tb = base(ModelKind::NormalKnownVar, Truth{0.0, 0.0, 1.0}, 10, 4000);
      const std::vector<std::pair<double, double>> weights = {
          {0.0, 0.1}, {0.0, 1.0}, {0.0, 10.0}, {1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}};
      for (const auto& [mu, tau2] : weights) {
        for (double eps : kEpsilons) {
          tb.batch.rules.push_back(RuleSpec::robbins_exact(eps, NormalWeight{mu, tau2}));
          tb.row_labels.push_back("mu0=" + fmt(mu) + ",tau2=" + fmt(tau2));
        }
      }
      out.push_back(std::move(tb));
      break;
    }
    case 3:
      for (double theta : {0.5, 0.7, 0.9}) {
        auto tb = base(ModelKind::Bernoulli, Truth{theta, 0.0, 1.0}, 100, 4000);
        for (double c : kConfidences) {
          tb.batch.rules.push_back(RuleSpec::likelihood_ratio(c));
          tb.row_labels.push_back("theta=" + fmt(theta));
        }
        out.push_back(std::move(tb));
      }
      break;
    case 4:
      for (double theta : {0.5, 0.7, 0.9}) {
        auto tb = base(ModelKind::Bernoulli, Truth{theta, 0.0, 1.0}, 100, 4000);
        for (double a : {0.5, 1.0, 5.0}) {
          for (double eps : kEpsilons) {
            tb.batch.rules.push_back(RuleSpec::robbins_exact(eps, BetaWeight{a, a}));
            tb.row_labels.push_back("theta=" + fmt(theta) + ",beta(" + fmt(a) + "," + fmt(a) + ")");
          }
        }
        out.push_back(std::move(tb));
      }
      break;
    case 5: {
      auto tb = base(ModelKind::TwoBernoulli, Truth{0.2, 0.25, 1.0}, 50, 2000);
      const double two_pi2 = 2.0 * std::numbers::pi * std::numbers::pi;
      const std::vector<std::tuple<double, double, std::string>> weights = {
          {0.0, two_pi2, "mu0=0,tau2=2pi^2"}, {0.0, 5.0, "mu0=0,tau2=5"},
          {0.0, 1.0, "mu0=0,tau2=1"},         {0.0, 0.1, "mu0=0,tau2=0.1"},
          {1.0, 5.0, "mu0=1,tau2=5"},         {-1.0, 5.0, "mu0=-1,tau2=5"}};
      for (const auto& [mu, tau2, label] : weights) {
        for (double eps : kEpsilons) {
          tb.batch.rules.push_back(RuleSpec::robbins_approx(eps, NormalWeight{mu, tau2}));
          tb.row_labels.push_back(label);
        }
      }
      out.push_back(std::move(tb));
      break;
    }
    default:
      throw DomainError("table id must be 1, 2, 3, 4 or 5");
  }
  return out;
}

TableReport reproduce_table(int table_id, std::size_t reps, std::uint64_t seed, int threads) {
  TableReport report;
  const std::string name = "T" + std::to_string(table_id);
  for (const auto& tb : table_layout(table_id, reps, seed)) {
    const auto tallies = run_batch(tb.batch, threads);
    for (std::size_t j = 0; j < tallies.size(); ++j) {
      report.rows.push_back(make_row(name, tb.row_labels[j], tb.batch.rules[j].nominal_level(),
                                     tallies[j], tb.batch));
    }
  }
  return report;
}

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// RFC 4180 quoting: labels such as "mu0=0,tau2=1" contain commas.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  return fields;
}

std::string level_text(double level) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", level);
  return buf;
}

}  // namespace

void write_csv(const TableReport& report, std::ostream& out) {
  out << "table,row_label,level,contradictions_pct,noncoverages_pct,se_contra,se_noncov,reps,nmin,"
         "nmax,seed\n";
  for (const auto& r : report.rows) {
    out << csv_field(r.table) << ',' << csv_field(r.row_label) << ',' << level_text(r.level) << ','
        << fixed(r.contradictions_pct, 4) << ',' << fixed(r.noncoverages_pct, 4) << ','
        << fixed(r.se_contra, 4) << ',' << fixed(r.se_noncov, 4) << ',' << r.reps << ','
        << r.n_min << ',' << r.n_max << ',' << r.seed << '\n';
  }
}

std::string to_json(const TableReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"table", r.table},
                    {"row_label", r.row_label},
                    {"level", r.level},
                    {"contradictions_pct", r.contradictions_pct},
                    {"noncoverages_pct", r.noncoverages_pct},
                    {"se_contra", r.se_contra},
                    {"se_noncov", r.se_noncov},
                    {"reps", r.reps},
                    {"nmin", r.n_min},
                    {"nmax", r.n_max},
                    {"seed", r.seed}});
  }
  return rows.dump(2);
}

std::vector<ReferenceCell> read_reference(std::istream& in) {
  std::vector<ReferenceCell> cells;
  std::string line;
  if (!std::getline(in, line)) return cells;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < 5) throw DomainError("reference row needs five fields: " + line);
    try {
      cells.push_back({fields[0], fields[1], std::stod(fields[2]), std::stod(fields[3]),
                       std::stod(fields[4])});
    } catch (const std::logic_error&) {
      throw DomainError("reference row has a non-numeric field: " + line);
    }
  }
  return cells;
}

double CellComparison::diff_contra() const {
  return observed.contradictions_pct - reference.contradictions_pct;
}

double CellComparison::diff_noncov() const {
  return observed.noncoverages_pct - reference.noncoverages_pct;
}

bool CellComparison::within(double k) const {
  return std::abs(diff_contra()) <= k * se_contra && std::abs(diff_noncov()) <= k * se_noncov;
}

std::vector<CellComparison> compare_to_reference(const TableReport& report,
                                                 const std::vector<ReferenceCell>& reference,
                                                 std::size_t reference_reps) {
  auto variance = [](double pct, std::size_t reps) {
    const double r = static_cast<double>(reps);
    const double p = std::max(pct / 100.0, 1.0 / r);
    return p * (1.0 - p) / r;
  };
  std::vector<CellComparison> out;
  for (const auto& row : report.rows) {
    for (const auto& ref : reference) {
      if (ref.table != row.table || ref.row_label != row.row_label ||
          std::abs(ref.level - row.level) > 1e-9) {
        continue;
      }
      CellComparison c;
      c.observed = row;
      c.reference = ref;
      c.se_contra = 100.0 * std::sqrt(variance(row.contradictions_pct, row.reps) +
                                      variance(ref.contradictions_pct, reference_reps));
      c.se_noncov = 100.0 * std::sqrt(variance(row.noncoverages_pct, row.reps) +
                                      variance(ref.noncoverages_pct, reference_reps));
      out.push_back(c);
      break;
    }
  }
  return out;
}

}  // namespace robbins::simulation
