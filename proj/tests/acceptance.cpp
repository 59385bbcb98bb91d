// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every failing check is listed in kKnownDeviations
// (reported as FAIL, explained in the README) and nonzero otherwise.
//
// Usage: acceptance [reps=10000] [determinism_reps=1000]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "robbins/bernoulli.hpp"
#include "robbins/normal.hpp"
#include "robbins/simulation.hpp"
#include "robbins/special.hpp"
#include "robbins/two_bernoulli.hpp"

using namespace robbins;
namespace sim = robbins::simulation;

namespace {

// Checks that fail for a documented reason.  The conditional two-sample
// interval uses the normalized log-odds weight; the printed endpoints match a
// weight with a different scale.
const std::set<std::string> kKnownDeviations = {"two-bernoulli conditional"};

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct Criterion {
  Criterion(int id, std::string title) : id(id), title(std::move(title)) {}

  int id;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  [[nodiscard]] bool passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

bool matches_printed(double value, double printed, int decimals) {
  const double unit = std::pow(10.0, -decimals);
  return std::abs(std::round(value / unit) * unit - printed) <= unit * 1.000001;
}

void printed_interval(Criterion& c, const std::string& name, const Interval& got, double lo,
                      double hi, int decimals) {
  const bool ok = matches_printed(got.lower, lo, decimals) && matches_printed(got.upper, hi, decimals);
  char buf[160];
  std::snprintf(buf, sizeof buf, "got (%.*f, %.*f), printed (%.*f, %.*f)", decimals + 1, got.lower,
                decimals + 1, got.upper, decimals, lo, decimals, hi);
  c.add(name, ok, buf);
}

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Criterion exact_values() {
  Criterion c{1, "printed interval illustrations"};
  const auto t0 = Clock::now();
  const PersistenceLevel e20(0.2);
  {
    const normal::NormalSuffStat st(100, 0.0);
    const std::pair<NormalWeight, double> cases[] = {
        {{0, 1}, 0.280}, {{0, 4}, 0.304}, {{1, 1}, 0.297}, {{1, 4}, 0.308}};
    for (const auto& [w, h] : cases) {
      printed_interval(c, "normal " + to_string(WeightSpec{w}),
                       normal::robbins_interval_known_var(st, 1.0, w, e20), -h, h, 3);
    }
    printed_interval(c, "normal classical 0.995", normal::classical_interval(st, 1.0, 0.995),
                     -0.281, 0.281, 3);
    const normal::NormalSuffStat st2(100, 0.0, 1.0);
    printed_interval(c, "normal nig profile", normal::nig_profile_interval(st2, {0, 8, 2, 1}, e20),
                     -0.323, 0.323, 3);
    printed_interval(c, "normal approx estimated variance",
                     normal::approx_interval_unknown_var(st2, {0, 0.125}, e20), -0.241, 0.241, 3);
  }
  {
    const bernoulli::BernoulliSuffStat st(100, 40);
    const std::tuple<double, double, double, double, double, double> rows[] = {
        {0.5, 0.2673, 0.5435, 0.2697, 0.5379, 0}, {1, 0.2738, 0.5359, 0.2740, 0.5332, 0},
        {5, 0.2858, 0.5221, 0.2843, 0.5216, 0}};
    for (const auto& [a, elo, ehi, alo, ahi, unused] : rows) {
      (void)unused;
      const BetaWeight w(a, a);
      printed_interval(c, "bernoulli exact " + to_string(WeightSpec{w}),
                       bernoulli::robbins_interval_bernoulli(st, w, e20), elo, ehi, 4);
      printed_interval(c, "bernoulli arcsine " + to_string(WeightSpec{w}),
                       bernoulli::arcsine_approx_interval(st, bernoulli::matched_omega_weight(w), e20),
                       alo, ahi, 4);
    }
    printed_interval(c, "bernoulli lr 0.995", bernoulli::lr_interval(st, 0.995), 0.2702, 0.5400, 4);
  }
  {
    const two_bernoulli::TwoSampleStat st(30, 70, 20, 30);
    const double two_pi2 = 2 * std::numbers::pi * std::numbers::pi;
    printed_interval(c, "two-bernoulli conditional",
                     two_bernoulli::robbins_conditional_interval(st, e20).interval, -0.195, 2.227, 3);
    printed_interval(c, "two-bernoulli approx normal:0,2pi^2",
                     two_bernoulli::approx_interval_log_odds(st, {0, two_pi2}, e20), -0.306, 2.211, 3);
    printed_interval(c, "two-bernoulli approx normal:0,1",
                     two_bernoulli::approx_interval_log_odds(st, {0, 1}, e20), -0.125, 2.030, 3);
    printed_interval(c, "two-bernoulli wald 0.99", two_bernoulli::wald_interval_log_odds(st, 0.99),
                     -0.204, 2.109, 3);
    printed_interval(c, "two-bernoulli wald 0.995",
                     two_bernoulli::wald_interval_log_odds(st, 0.995), -0.307, 2.213, 3);
  }
  c.seconds = since(t0);
  c.add("runtime under 1 s", c.seconds < 1.0, fmt("%.3f s", c.seconds));
  return c;
}

// ---------------------------------------------------------------------------

std::vector<sim::ReferenceCell> load_reference() {
  std::ifstream in(ROBBINS_REFERENCE_CSV);
  if (!in) {
    std::fprintf(stderr, "cannot open reference %s\n", ROBBINS_REFERENCE_CSV);
    std::exit(3);
  }
  return sim::read_reference(in);
}

Criterion table_agreement(int id, const std::string& title, const std::vector<int>& tables,
                          const std::map<int, sim::TableReport>& reports,
                          const std::map<int, double>& seconds,
                          const std::vector<sim::ReferenceCell>& reference, double budget_s) {
  Criterion c{id, title};
  double total_s = 0.0;
  for (int t : tables) {
    const auto& report = reports.at(t);
    const auto cmp = sim::compare_to_reference(report, reference);
    std::size_t values = 0;
    std::size_t inside = 0;
    double worst = 0.0;
    std::string worst_cell;
    for (const auto& x : cmp) {
      const double zc = std::abs(x.diff_contra()) / x.se_contra;
      const double zn = std::abs(x.diff_noncov()) / x.se_noncov;
      values += 2;
      inside += (zc <= 3.0) + (zn <= 3.0);
      for (const auto& [z, what] : {std::pair{zc, "contra"}, std::pair{zn, "noncov"}}) {
        if (z > worst) {
          worst = z;
          worst_cell = x.reference.row_label + " @" + fmt("%.4g", x.reference.level) + " " + what;
        }
      }
    }
    const bool all_cells = cmp.size() == report.rows.size();
    char buf[256];
    std::snprintf(buf, sizeof buf, "%zu/%zu values within 3 SE; largest |diff|/SE %.2f (%s)",
                  inside, values, worst, worst_cell.c_str());
    c.add("T" + std::to_string(t) + " agreement", all_cells && inside == values, buf);
    total_s += seconds.at(t);
  }
  c.seconds = total_s;
  c.add("runtime", total_s < budget_s, fmt2("%.1f s (target < %.0f s)", total_s, budget_s));
  return c;
}

Criterion persistence_bound(const std::map<int, sim::TableReport>& reports) {
  Criterion c{6, "non-coverage at most epsilon + 3 SE for every Robbins cell"};
  for (int t : {2, 3, 4, 5}) {
    std::size_t cells = 0;
    std::size_t ok = 0;
    double worst = -1e300;
    for (const auto& r : reports.at(t).rows) {
      // Table 3 holds only likelihood-ratio rows, which carry no persistence guarantee.
      if (t == 3) continue;
      const double eps = 1.0 - r.level;
      const double slack = r.noncoverages_pct / 100.0 - (eps + 3.0 * r.se_noncov / 100.0);
      ++cells;
      ok += slack <= 0.0;
      worst = std::max(worst, slack);
    }
    if (t == 3) continue;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu cells; max excess %.4f", ok, cells, worst);
    c.add("T" + std::to_string(t), ok == cells, buf);
  }
  return c;
}

// ---------------------------------------------------------------------------

Criterion properties(const std::map<int, sim::TableReport>& reports) {
  Criterion c{7, "structural properties"};
  std::mt19937_64 rng(2024);
  const PersistenceLevel e20(0.2);

  {
    bool ok = true;
    std::string first_bad;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 400;
      const bernoulli::BernoulliSuffStat st(n, rng() % (n + 1));
      const BetaWeight w(0.5 + (rng() % 10) / 2.0, 0.5 + (rng() % 10) / 2.0);
      Interval prev{st.mle(), st.mle()};
      for (double eps : {0.5, 0.2, 0.05, 0.01}) {
        const auto i = bernoulli::robbins_interval_bernoulli(st, w, PersistenceLevel(eps));
        const bool good = i.lower <= prev.lower && i.upper >= prev.upper && i.contains(st.mle());
        if (!good && first_bad.empty()) {
          first_bad = "bernoulli n=" + std::to_string(st.n) + " s=" + std::to_string(st.s) +
                      fmt(" eps=%g", eps);
        }
        ok = ok && good;
        prev = i;
      }
      const double ybar = std::normal_distribution<double>(0, 1)(rng);
      Interval pn{ybar, ybar};
      for (double eps : {0.5, 0.2, 0.05, 0.01}) {
        const auto i = normal::robbins_interval_known_var({n, ybar}, 1.0, {0, 1}, PersistenceLevel(eps));
        const bool good = i.lower <= pn.lower && i.upper >= pn.upper && i.contains(ybar);
        if (!good && first_bad.empty()) first_bad = "normal n=" + std::to_string(n) + fmt(" eps=%g", eps);
        ok = ok && good;
        pn = i;
      }
    }
    c.add("nested in epsilon and contains the MLE", ok, ok ? "200 data sets" : first_bad);
  }
  {
    bool ok = true;
    for (const auto& [t, report] : reports)
      for (const auto& r : report.rows) ok = ok && r.contradictions_pct <= r.noncoverages_pct;
    c.add("contradiction implies non-coverage in every cell", ok);
  }
  {
    double err = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 2 + rng() % 500;
      const double ybar = std::normal_distribution<double>(0, 2)(rng);
      const NormalWeight w(std::normal_distribution<double>(0, 1)(rng), 0.1 + (rng() % 50) / 10.0);
      const double shift = std::normal_distribution<double>(0, 5)(rng);
      const double k = 0.2 + (rng() % 40) / 8.0;
      const auto base = normal::robbins_interval_known_var({n, ybar}, 1.3, w, e20);
      const auto moved = normal::robbins_interval_known_var(
          {n, k * ybar + shift}, 1.3 * k * k, {k * w.mean + shift, w.variance * k * k}, e20);
      err = std::max({err, std::abs(moved.lower - (k * base.lower + shift)) / (1 + std::abs(moved.lower)),
                      std::abs(moved.upper - (k * base.upper + shift)) / (1 + std::abs(moved.upper))});
    }
    c.add("normal location-scale equivariance", err < 1e-12, fmt("max rel err %.2e", err));
  }
  {
    double err = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 400;
      const std::size_t s = rng() % (n + 1);
      const BetaWeight w(0.3 + (rng() % 20) / 4.0, 0.3 + (rng() % 20) / 4.0);
      const auto a = bernoulli::robbins_interval_bernoulli({n, s}, w, e20);
      const auto b = bernoulli::robbins_interval_bernoulli({n, n - s}, {w.beta, w.alpha}, e20);
      err = std::max({err, std::abs(a.lower - (1 - b.upper)), std::abs(a.upper - (1 - b.lower))});
    }
    c.add("bernoulli theta <-> 1 - theta symmetry", err < 1e-8, fmt("max err %.2e", err));
  }
  {
    double err = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n1 = 2 + rng() % 60;
      const std::size_t n2 = 2 + rng() % 60;
      const std::size_t s1 = 1 + rng() % (n1 - 1);
      const std::size_t s2 = 1 + rng() % (n2 - 1);
      const two_bernoulli::TwoSampleStat a(n1, n2, s1, s2);
      const two_bernoulli::TwoSampleStat b(n2, n1, s2, s1);
      const auto ca = two_bernoulli::robbins_conditional_interval(a, e20).interval;
      const auto cb = two_bernoulli::robbins_conditional_interval(b, e20).interval;
      const auto aa = two_bernoulli::approx_interval_log_odds(a, {0, 3}, e20);
      const auto ab = two_bernoulli::approx_interval_log_odds(b, {0, 3}, e20);
      err = std::max({err, std::abs(ca.lower + cb.upper), std::abs(ca.upper + cb.lower),
                      std::abs(aa.lower + ab.upper), std::abs(aa.upper + ab.lower)});
    }
    c.add("two-bernoulli label-swap antisymmetry", err < 1e-7, fmt("max err %.2e", err));
  }
  {
    double err = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + rng() % 1000;
      const std::size_t s = 1 + rng() % (n - 1);
      const bernoulli::BernoulliSuffStat st(n, s);
      const BetaWeight w(0.5 + (rng() % 10) / 2.0, 0.5 + (rng() % 10) / 2.0);
      const auto bin = bernoulli::robbins_interval_bernoulli(st, w, e20);
      const MixtureLogDensity q{bernoulli::negative_binomial_log_mixture(st, w)};
      const auto nb = robbins_region(bernoulli::negative_binomial_loglik(st), q, e20).interval;
      err = std::max({err, std::abs(bin.lower - nb.lower), std::abs(bin.upper - nb.upper)});
    }
    c.add("binomial and negative-binomial regions coincide", err < 1e-9, fmt("max err %.2e", err));
  }
  {
    double err = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 5 + rng() % 300;
      const std::size_t s = 1 + rng() % (n - 1);
      const double a = 0.5 + (rng() % 10) / 2.0;
      const double b = 0.5 + (rng() % 10) / 2.0;
      const bernoulli::BernoulliSuffStat st(n, s);
      const double sd = static_cast<double>(s);
      const double fd = static_cast<double>(n - s);
      const double logc = log_choose(n, s);
      LogLikelihoodFn ll;
      ll.eval = [=](double om) {
        const double th = std::sin(om) * std::sin(om);
        return logc + xlogy(sd, th) + xlog1py(fd, -th);
      };
      ll.mle = bernoulli::omega(st.mle());
      ll.max_value = ll.eval(ll.mle);
      ll.domain_lower = 0.0;
      ll.domain_upper = std::numbers::pi / 2;
      ll.step = 0.05;
      const auto log_w = [=](double om) {
        return std::log(2.0) + (2 * a - 1) * std::log(std::sin(om)) +
               (2 * b - 1) * std::log(std::cos(om)) - log_beta(a, b);
      };
      const auto q = quadrature_log_mixture(ll.eval, log_w, {0.0, std::numbers::pi / 2, ll.mle, 0.05});
      const auto om = robbins_region(ll, q, e20).interval;
      const auto th = bernoulli::robbins_interval_bernoulli(st, {a, b}, e20);
      err = std::max({err, std::abs(om.lower - bernoulli::omega(th.lower)),
                      std::abs(om.upper - bernoulli::omega(th.upper))});
    }
    c.add("exact region equivariant under arcsin sqrt", err < 1e-6, fmt("max err %.2e", err));
  }
  {
    double err = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const double n = static_cast<double>(2 + rng() % 2000);
      const double ybar = std::normal_distribution<double>(0, 1)(rng);
      const double mu = std::normal_distribution<double>(0, 1)(rng);
      const double tau2 = 0.1 + (rng() % 50) / 10.0;
      const double s2 = 0.5 + (rng() % 20) / 4.0;
      const double eps = 0.01 + (rng() % 90) / 100.0;
      const double v = s2 / n;
      const double pv = 1.0 / (1.0 / tau2 + 1.0 / v);
      const double pm = pv * (mu / tau2 + ybar / v);
      const double qa = 0.5 / pv - 0.5 / tau2;
      const double qb = -pm / pv + mu / tau2;
      const double qc = 0.5 * pm * pm / pv - 0.5 * mu * mu / tau2 + 0.5 * std::log(pv / tau2) + std::log(eps);
      const double disc = std::sqrt(qb * qb - 4 * qa * qc);
      const auto r = normal::robbins_interval_known_var({static_cast<std::size_t>(n), ybar}, s2,
                                                        {mu, tau2}, PersistenceLevel(eps));
      err = std::max({err, std::abs(r.lower - (-qb - disc) / (2 * qa)),
                      std::abs(r.upper - (-qb + disc) / (2 * qa))});
    }
    c.add("posterior-over-prior recast of the normal interval", err < 1e-9, fmt("max err %.2e", err));
  }
  {
    double norm_err = 0.0;
    double central_err = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n1 = 1 + rng() % 80;
      const std::size_t n2 = 1 + rng() % 80;
      const std::size_t t = rng() % (n1 + n2 + 1);
      const double psi = -8.0 + 16.0 * static_cast<double>(rng() % 1000) / 1000.0;
      const two_bernoulli::FisherNoncentralHypergeometric law(n1, n2, t);
      double total = 0.0;
      for (std::size_t u = law.support_min(); u <= law.support_max(); ++u) {
        total += std::exp(law.log_pmf(u, psi));
        const double central = log_choose(n1, u) + log_choose(n2, t - u) - log_choose(n1 + n2, t);
        central_err = std::max(central_err, std::abs(law.log_pmf(u, 0.0) - central));
      }
      norm_err = std::max(norm_err, std::abs(total - 1.0));
    }
    c.add("noncentral hypergeometric normalization", norm_err < 1e-12, fmt("max err %.2e", norm_err));
    c.add("psi = 0 gives the central hypergeometric", central_err < 1e-12,
          fmt("max err %.2e", central_err));
  }
  return c;
}

// ---------------------------------------------------------------------------

double laplace_error(std::size_t n) {
  const bernoulli::BernoulliSuffStat st(n, 2 * n / 5);
  const auto ll = bernoulli::binomial_loglik(st);
  const double p = st.mle();
  const double info = static_cast<double>(n) / (p * (1.0 - p));
  return std::abs(laplace_log_mixture(ll.max_value, 1.0, info).value -
                  bernoulli::beta_binomial_log_pmf(st, {1, 1}));
}

Criterion appendix() {
  Criterion c{8, "martingale bound, Laplace rate and growth law"};
  const auto t0 = Clock::now();
  const LogRatioFactory normal_f = [] { return normal::make_ratio_process(0.0, 1.0, {0, 1}); };
  const LogRatioFactory bern_f = [] { return bernoulli::make_ratio_process(0.7, {1, 1}); };
  for (const auto& [name, f] : {std::pair{"normal", normal_f}, std::pair{"bernoulli", bern_f}}) {
    for (double k : {5.0, 10.0, 20.0}) {
      const auto est = verify_ville_inequality(f, k, 2000, 10000, 42);
      char buf[128];
      std::snprintf(buf, sizeof buf, "P(cross) = %.4f (se %.4f), bound %.4f", est.probability,
                    est.standard_error, est.bound());
      c.add(std::string("ville ") + name + " k=" + fmt("%g", k), est.within_bound(), buf);
    }
  }
  const double e1 = laplace_error(200);
  const double e2 = laplace_error(2000);
  const double e3 = laplace_error(20000);
  const bool rate = e1 > e2 && e2 > e3 && std::abs(e1 / e2 - 10.0) < 1.0 && std::abs(e2 / e3 - 10.0) < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "errors %.3e, %.3e, %.3e", e1, e2, e3);
  c.add("laplace error decreases like 1/n", rate, buf);

  double lo = 1e300;
  double hi = -1e300;
  const NormalWeight w(0, 1);
  for (double n = 10; n <= 1e6; n *= 1.1) {
    const double d = closed_form_half_width(1.0, n, 0.0, w, PersistenceLevel(0.2));
    const double g = n * d * d - std::log(n);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  c.add("n d_n^2 - log n stays in a fixed band", hi - lo < 0.2, fmt2("band [%.4f, %.4f]", lo, hi));
  c.seconds = since(t0);
  return c;
}

// ---------------------------------------------------------------------------

std::string table_csv(int id, std::size_t reps, int threads) {
  std::ostringstream os;
  sim::write_csv(sim::reproduce_table(id, reps, 42, threads), os);
  return os.str();
}

Criterion determinism(std::size_t reps) {
  Criterion c{9, "bit-identical CSV across 1, 2 and 8 threads"};
  const auto t0 = Clock::now();
  for (int id = 1; id <= 5; ++id) {
    const auto one = table_csv(id, reps, 1);
    const bool same = table_csv(id, reps, 2) == one && table_csv(id, reps, 8) == one;
    c.add("T" + std::to_string(id), same, std::to_string(reps) + " reps");
  }
  c.seconds = since(t0);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t reps = argc > 1 ? std::stoul(argv[1]) : 10000;
  const std::size_t det_reps = argc > 2 ? std::stoul(argv[2]) : 1000;
  const auto reference = load_reference();

  std::vector<Criterion> results;
  results.push_back(exact_values());

  std::map<int, sim::TableReport> reports;
  std::map<int, double> seconds;
  for (int id = 1; id <= 5; ++id) {
    const auto t0 = Clock::now();
    reports[id] = sim::reproduce_table(id, reps, 42);
    seconds[id] = since(t0);
    std::fprintf(stderr, "table T%d: %.1f s\n", id, seconds[id]);
  }
  results.push_back(table_agreement(2, "table 1 within 3 SE", {1}, reports, seconds, reference, 120));
  results.push_back(table_agreement(3, "table 2 within 3 SE", {2}, reports, seconds, reference, 300));
  results.push_back(
      table_agreement(4, "tables 3 and 4 within 3 SE", {3, 4}, reports, seconds, reference, 900));
  results.push_back(table_agreement(5, "table 5 within 3 SE", {5}, reports, seconds, reference, 300));
  results.push_back(persistence_bound(reports));
  results.push_back(properties(reports));
  results.push_back(appendix());
  results.push_back(determinism(det_reps));

  std::vector<std::string> unexpected;
  for (const auto& c : results) {
    std::printf("criterion %d: %s  %s\n", c.id, c.passed() ? "PASS" : "FAIL", c.title.c_str());
    for (const auto& k : c.checks) {
      if (k.ok) continue;
      const bool known = kKnownDeviations.count(k.name) > 0;
      std::printf("    %s %s: %s\n", known ? "known deviation" : "failed", k.name.c_str(),
                  k.detail.c_str());
      if (!known) unexpected.push_back("criterion " + std::to_string(c.id) + " " + k.name);
    }
  }
  std::printf("\ndetails\n");
  for (const auto& c : results) {
    for (const auto& k : c.checks) {
      std::printf("  [%d] %-4s %-48s %s\n", c.id, k.ok ? "ok" : "FAIL", k.name.c_str(), k.detail.c_str());
    }
  }
  if (!unexpected.empty()) {
    std::printf("\n%zu unexpected failure(s)\n", unexpected.size());
    return 1;
  }
  std::printf("\nall failures are documented deviations\n");
  return 0;
}
