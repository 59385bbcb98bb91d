#pragma once

// Monte Carlo harness: growing samples, an interval rule applied at every
// monitored n, and the share of replications that ever contradict themselves
// or miss the truth.
//
// Two kernels produce identical tallies:
//   run_batch            lockstep over n, OpenMP-parallel across replications;
//                        rules that depend on (n, s) only are evaluated once
//                        per distinct s.
//   run_batch_reference  serial, one replication at a time.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "robbins/core.hpp"

namespace robbins::simulation {

enum class ModelKind { NormalKnownVar, Bernoulli, TwoBernoulli };
enum class RuleKind { ClassicalZ, LikelihoodRatio, RobbinsExact, RobbinsApprox };

/// Model truth: theta (mean or proportion); theta2 is the second proportion
/// for TwoBernoulli; sigma0_sq is the known normal variance.
struct Truth {
  double theta = 0.0;
  double theta2 = 0.0;
  double sigma0_sq = 1.0;
};

/// Parameter monitored for a model: theta, or the log-odds ratio for TwoBernoulli.
double true_parameter(ModelKind model, const Truth& truth);

struct RuleSpec {
  RuleKind kind = RuleKind::ClassicalZ;
  double confidence = 0.0;                // ClassicalZ, LikelihoodRatio
  std::optional<PersistenceLevel> level;  // Robbins rules
  std::optional<WeightSpec> weight;       // Robbins rules

  static RuleSpec classical(double confidence);
  static RuleSpec likelihood_ratio(double confidence);
  static RuleSpec robbins_exact(double epsilon, WeightSpec weight);
  static RuleSpec robbins_approx(double epsilon, WeightSpec weight);

  /// Confidence level or persistence level 1 - epsilon.
  [[nodiscard]] double nominal_level() const;
};

struct SequencePlan {
  ModelKind model = ModelKind::NormalKnownVar;
  Truth truth;
  RuleSpec rule;
  std::size_t n_min = 10;
  std::size_t n_max = 4000;
  std::size_t stride = 1;  // monitor n_min, n_min + stride, ..., and n_max
  std::size_t reps = 10000;
  std::uint64_t seed = 42;
};

/// Several rules applied to the same simulated sequences.
struct Batch {
  ModelKind model = ModelKind::NormalKnownVar;
  Truth truth;
  std::vector<RuleSpec> rules;
  std::size_t n_min = 10;
  std::size_t n_max = 4000;
  std::size_t stride = 1;
  std::size_t reps = 10000;
  std::uint64_t seed = 42;
};

struct CellTally {
  std::size_t reps = 0;
  std::size_t contradictions = 0;
  std::size_t noncoverages = 0;
  friend bool operator==(const CellTally&, const CellTally&) = default;
};

/// Throws DomainError for an invalid batch or an unsupported model/rule pair.
void validate(const Batch& batch);

/// threads <= 0 uses the OpenMP default.
std::vector<CellTally> run_batch(const Batch& batch, int threads = 0);
std::vector<CellTally> run_batch_reference(const Batch& batch);

struct TableRow {
  std::string table;
  std::string row_label;
  double level = 0.0;
  double contradictions_pct = 0.0;
  double noncoverages_pct = 0.0;
  double se_contra = 0.0;
  double se_noncov = 0.0;
  std::size_t reps = 0;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::uint64_t seed = 0;
};

struct TableReport {
  std::vector<TableRow> rows;
};

TableRow make_row(const std::string& table, const std::string& row_label, double level,
                  const CellTally& tally, const Batch& batch);

TableRow run_plan(const SequencePlan& plan, int threads = 0);

/// Cell layout of one of the five reproduced tables, grouped into batches
/// that share simulated data.
struct TableBatch {
  Batch batch;
  std::vector<std::string> row_labels;  // parallel to batch.rules
};
std::vector<TableBatch> table_layout(int table_id, std::size_t reps, std::uint64_t seed);

TableReport reproduce_table(int table_id, std::size_t reps, std::uint64_t seed, int threads = 0);

void write_csv(const TableReport& report, std::ostream& out);
std::string to_json(const TableReport& report);

struct ReferenceCell {
  std::string table;
  std::string row_label;
  double level = 0.0;
  double contradictions_pct = 0.0;
  double noncoverages_pct = 0.0;
};

/// Reads `table,row_label,level,contradictions_pct,noncoverages_pct` rows
/// (header line required).
std::vector<ReferenceCell> read_reference(std::istream& in);

struct CellComparison {
  TableRow observed;
  ReferenceCell reference;
  double se_contra = 0.0;  // standard error of the difference, in points
  double se_noncov = 0.0;
  [[nodiscard]] double diff_contra() const;
  [[nodiscard]] double diff_noncov() const;
  [[nodiscard]] bool within(double k) const;
};

/// Matches observed rows to reference cells.  The difference of two
/// independent binomial estimates has variance p1(1-p1)/r1 + p2(1-p2)/r2; each
/// p is floored at 1/r so that cells printed as 0.00 keep a one-event margin.
std::vector<CellComparison> compare_to_reference(const TableReport& report,
                                                 const std::vector<ReferenceCell>& reference,
                                                 std::size_t reference_reps = 10000);

}  // namespace robbins::simulation
