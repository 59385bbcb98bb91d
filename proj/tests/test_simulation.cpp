#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "robbins/simulation.hpp"
#include "robbins/two_bernoulli.hpp"

using namespace robbins;
using namespace robbins::simulation;

namespace {

Batch small_batch(ModelKind model) {
  Batch b;
  b.model = model;
  b.reps = 64;
  switch (model) {
    case ModelKind::NormalKnownVar:
      b.truth = {0.0, 0.0, 1.0};
      b.n_min = 10;
      b.n_max = 300;
      b.rules = {RuleSpec::classical(0.95), RuleSpec::robbins_exact(0.2, NormalWeight{0, 1}),
                 RuleSpec::robbins_approx(0.2, NormalWeight{0, 1}),
                 RuleSpec::robbins_exact(0.2, NormalInverseGamma{0, 1, 2, 1})};
      break;
    case ModelKind::Bernoulli:
      b.truth = {0.7, 0.0, 1.0};
      b.n_min = 20;
      b.n_max = 300;
      b.rules = {RuleSpec::likelihood_ratio(0.9), RuleSpec::robbins_exact(0.2, BetaWeight{1, 1}),
                 RuleSpec::robbins_approx(0.2, BetaWeight{0.5, 0.5})};
      break;
    case ModelKind::TwoBernoulli:
      b.truth = {0.2, 0.25, 1.0};
      b.n_min = 20;
      b.n_max = 120;
      b.rules = {RuleSpec::classical(0.95), RuleSpec::robbins_approx(0.2, NormalWeight{0, 1}),
                 RuleSpec::robbins_exact(0.2, LogOddsJeffreysInduced{})};
      break;
  }
  return b;
}

}  // namespace

TEST_CASE("parallel kernel matches the serial reference for every thread count") {
  for (auto model : {ModelKind::NormalKnownVar, ModelKind::Bernoulli, ModelKind::TwoBernoulli}) {
    const auto batch = small_batch(model);
    const auto ref = run_batch_reference(batch);
    for (int threads : {1, 2, 8}) CHECK(run_batch(batch, threads) == ref);
    for (const auto& t : ref) {
      CHECK(t.reps == batch.reps);
      CHECK(t.contradictions <= t.noncoverages);
    }
  }
}

TEST_CASE("a coarser monitoring grid cannot find more contradictions") {
  auto batch = small_batch(ModelKind::Bernoulli);
  const auto every = run_batch(batch);
  batch.stride = 25;
  const auto coarse = run_batch(batch);
  for (std::size_t j = 0; j < every.size(); ++j) {
    CHECK(coarse[j].contradictions <= every[j].contradictions);
    CHECK(coarse[j].noncoverages <= every[j].noncoverages);
  }
}

TEST_CASE("one replication gives 0 or 100 percent") {
  for (int id = 1; id <= 5; ++id) {
    for (auto& tb : table_layout(id, 1, 3)) {
      tb.batch.n_max = tb.batch.n_min + 50;
      const auto tallies = run_batch(tb.batch);
      for (std::size_t j = 0; j < tallies.size(); ++j) {
        const auto row = make_row("T", tb.row_labels[j], 0.5, tallies[j], tb.batch);
        CHECK((row.contradictions_pct == 0.0 || row.contradictions_pct == 100.0));
        CHECK((row.noncoverages_pct == 0.0 || row.noncoverages_pct == 100.0));
      }
    }
  }
}

TEST_CASE("table layouts have the published grids") {
  auto cells = [](int id) {
    std::size_t n = 0;
    for (const auto& tb : table_layout(id, 10, 1)) {
      CHECK(tb.row_labels.size() == tb.batch.rules.size());
      n += tb.batch.rules.size();
    }
    return n;
  };
  CHECK(cells(1) == 4);
  CHECK(cells(2) == 24);
  CHECK(cells(3) == 12);
  CHECK(cells(4) == 36);
  CHECK(cells(5) == 24);
  CHECK_THROWS_AS(table_layout(6, 10, 1), DomainError);
  const auto t5 = table_layout(5, 10, 1).front().batch;
  CHECK(t5.n_min == 50);
  CHECK(t5.n_max == 2000);
  CHECK(true_parameter(t5.model, t5.truth) == doctest::Approx(std::log(0.75 * 0.2 / (0.25 * 0.8))));
}

TEST_CASE("validation") {
  Batch b = small_batch(ModelKind::Bernoulli);
  b.n_min = 0;
  CHECK_THROWS_AS(validate(b), DomainError);
  b = small_batch(ModelKind::Bernoulli);
  b.n_min = 400;
  CHECK_THROWS_AS(validate(b), DomainError);
  b = small_batch(ModelKind::Bernoulli);
  b.reps = 0;
  CHECK_THROWS_AS(validate(b), DomainError);
  b = small_batch(ModelKind::Bernoulli);
  b.rules = {RuleSpec::classical(0.9)};
  CHECK_THROWS_AS(validate(b), DomainError);
  b.rules = {RuleSpec::robbins_exact(0.2, NormalWeight{0, 1})};
  CHECK_THROWS_AS(validate(b), DomainError);
  b = small_batch(ModelKind::NormalKnownVar);
  b.rules = {RuleSpec::likelihood_ratio(0.9)};
  CHECK_THROWS_AS(validate(b), DomainError);
  b = small_batch(ModelKind::TwoBernoulli);
  b.rules = {RuleSpec::robbins_exact(0.2, NormalWeight{0, 1})};
  CHECK_THROWS_AS(validate(b), DomainError);
  b.truth = {0.0, 0.3, 1.0};
  CHECK_THROWS_AS(validate(b), DomainError);
}

TEST_CASE("weights far from the truth make the sequence more conservative") {
  Batch b;
  b.model = ModelKind::NormalKnownVar;
  b.n_min = 10;
  b.n_max = 1000;
  b.reps = 2000;
  b.seed = 5;
  for (double mu : {0.0, 1.0, 2.0, 5.0}) b.rules.push_back(RuleSpec::robbins_exact(0.2, NormalWeight{mu, 1}));
  const auto t = run_batch(b);
  for (std::size_t j = 1; j < t.size(); ++j) {
    CHECK(t[j].noncoverages <= t[j - 1].noncoverages);
    CHECK(t[j].contradictions <= t[j - 1].contradictions);
  }
  CHECK(t.back().noncoverages <= 2);
}

TEST_CASE("run_plan reports percentages and standard errors") {
  SequencePlan plan;
  plan.model = ModelKind::Bernoulli;
  plan.truth = {0.5, 0.0, 1.0};
  plan.rule = RuleSpec::robbins_exact(0.2, BetaWeight{1, 1});
  plan.n_min = 100;
  plan.n_max = 400;
  plan.reps = 300;
  const auto row = run_plan(plan);
  CHECK(row.level == doctest::Approx(0.8));
  CHECK(row.reps == 300);
  const double p = row.noncoverages_pct / 100.0;
  CHECK(row.se_noncov == doctest::Approx(100.0 * std::sqrt(p * (1 - p) / 300.0)));
  CHECK(row.contradictions_pct <= row.noncoverages_pct);
  // Persistence bound on this small run.
  CHECK(p <= 0.2 + 3 * std::sqrt(0.2 * 0.8 / 300.0));
}

TEST_CASE("CSV and JSON output share fields; reference reader handles quoted labels") {
  TableReport report;
  Batch b;
  b.n_min = 10;
  b.n_max = 4000;
  b.seed = 42;
  report.rows.push_back(make_row("T2", "mu0=0,tau2=1", 0.8, {10000, 321, 939}, b));
  std::ostringstream csv;
  write_csv(report, csv);
  CHECK(csv.str() ==
        "table,row_label,level,contradictions_pct,noncoverages_pct,se_contra,se_noncov,reps,nmin,"
        "nmax,seed\n"
        "T2,\"mu0=0,tau2=1\",0.8,3.2100,9.3900,0.1763,0.2917,10000,10,4000,42\n");
  const auto j = nlohmann::json::parse(to_json(report));
  REQUIRE(j.is_array());
  CHECK(j[0]["row_label"] == "mu0=0,tau2=1");
  CHECK(j[0]["contradictions_pct"].get<double>() == doctest::Approx(3.21));
  for (const char* key : {"table", "level", "noncoverages_pct", "se_contra", "se_noncov", "reps",
                          "nmin", "nmax", "seed"}) {
    CHECK(j[0].contains(key));
  }

  std::istringstream in(csv.str());
  const auto ref = read_reference(in);
  REQUIRE(ref.size() == 1);
  CHECK(ref[0].row_label == "mu0=0,tau2=1");
  CHECK(ref[0].level == doctest::Approx(0.8));
  const auto cmp = compare_to_reference(report, ref);
  REQUIRE(cmp.size() == 1);
  CHECK(cmp[0].diff_contra() == doctest::Approx(0.0));
  CHECK(cmp[0].within(3.0));

  std::istringstream bad("table,row_label,level,c,n\nT1,x,abc,1,2\n");
  CHECK_THROWS_AS(read_reference(bad), DomainError);
}

TEST_CASE("comparison uses the standard error of a difference with a one-event floor") {
  TableReport report;
  Batch b;
  report.rows.push_back(make_row("T2", "mu0=5,tau2=1", 0.5, {10000, 0, 0}, b));
  const std::vector<ReferenceCell> ref = {{"T2", "mu0=5,tau2=1", 0.5, 0.0, 0.01}};
  const auto c = compare_to_reference(report, ref);
  REQUIRE(c.size() == 1);
  const double floor_var = 1e-4 * (1 - 1e-4) / 1e4;
  CHECK(c[0].se_contra == doctest::Approx(100 * std::sqrt(2 * floor_var)));
  CHECK(c[0].within(3.0));
}
