// Wall-clock comparison of the serial reference kernel and the lockstep
// OpenMP kernel on one batch per model.  Also confirms the tallies agree.
//
//   bench_simulation [reps] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

#include <omp.h>

#include "robbins/simulation.hpp"

namespace sim = robbins::simulation;

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void compare(const char* name, const sim::Batch& batch, int threads) {
  std::vector<sim::CellTally> ref;
  std::vector<sim::CellTally> par;
  const double t_ref = seconds([&] { ref = sim::run_batch_reference(batch); });
  const double t_par = seconds([&] { par = sim::run_batch(batch, threads); });
  std::printf("%-22s reps=%-6zu serial %8.3fs  openmp(%d) %8.3fs  speedup %5.2fx  %s\n", name,
              batch.reps, t_ref, threads, t_par, t_ref / t_par,
              ref == par ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t reps = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 500;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

  sim::Batch normal;
  normal.model = sim::ModelKind::NormalKnownVar;
  normal.rules = {sim::RuleSpec::classical(0.95),
                  sim::RuleSpec::robbins_exact(0.2, robbins::NormalWeight{0.0, 1.0})};
  normal.reps = reps;
  compare("normal z + exact", normal, threads);

  sim::Batch bern;
  bern.model = sim::ModelKind::Bernoulli;
  bern.truth.theta = 0.5;
  bern.n_min = 100;
  bern.rules = {sim::RuleSpec::robbins_exact(0.2, robbins::BetaWeight{1.0, 1.0}),
                sim::RuleSpec::likelihood_ratio(0.95)};
  bern.reps = reps;
  compare("bernoulli exact + lr", bern, threads);

  sim::Batch two;
  two.model = sim::ModelKind::TwoBernoulli;
  two.truth = {0.2, 0.25, 1.0};
  two.n_min = 50;
  two.n_max = 2000;
  two.rules = {sim::RuleSpec::robbins_approx(
      0.2, robbins::NormalWeight{0.0, 2.0 * std::numbers::pi * std::numbers::pi})};
  two.reps = reps;
  compare("two-bernoulli approx", two, threads);
  return 0;
}
