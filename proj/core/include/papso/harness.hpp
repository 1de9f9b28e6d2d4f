#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "papso/constraints.hpp"
#include "papso/gsuite.hpp"
#include "papso/swarm.hpp"
#include "papso/tolerance.hpp"

namespace papso {

/// Three sub-neighbourhoods in ring order: RRR2 (aw 2.40), RRR1 (aw 1.80),
/// classical (w 0.7298, iw = sw = 2.9922 / 2).
std::vector<CoefficientSet> default_coefficient_sets(double ip = 0.5);

struct ExperimentConfig {
  std::string problem = "g01";
  std::size_t n_particles = 50;
  long t_max = 10000;
  std::size_t n_runs = 25;
  ScheduleConfig schedule;
  PenaltyConfig penalty;
  std::size_t n_subgroups = 3;
  std::size_t links_per_particle = 4;
  std::vector<CoefficientSet> coefficients = default_coefficient_sets();
  std::size_t lh_candidates = 1000;
  double success_threshold = 1e-4;
  std::uint64_t base_seed = 1;
  bool record_traces = true;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws std::domain_error when counts or nested configs are invalid.
  void validate() const;
};

/// One time-step of a run.
struct StepRecord {
  long t = 0;
  double tol_ineq = 0.0;
  double tol_eq = 0.0;
  double percent_feasible_pbests = 0.0;
  /// Lowest pbest conflict among pbests feasible under the current
  /// tolerances; NaN when there is none. May rise as tolerances shrink.
  double best_feasible_conflict = 0.0;
  double mean_pbest_conflict = 0.0;
  /// Best conflict so far among points feasible at the final tolerances.
  double best_found = 0.0;
  UpdateKind update = UpdateKind::None;
};

struct RunResult {
  std::uint64_t seed = 0;
  bool found_feasible = false;
  bool success = false;
  std::vector<double> best_position;
  double best_conflict = 0.0;
  double error = 0.0;
  long long fe = 0;
  long long ce = 0;
  long long saturations = 0;
  double final_percent_feasible_pbests = 0.0;
  ToleranceState initial_tolerances;
  std::optional<SelfTuneResult> self_tune;
  std::vector<StepRecord> trace;
  std::optional<std::string> failure;  // set when the run aborted
};

RunResult run_single(const ExperimentConfig& config, const BenchmarkProblem& problem,
                     std::uint64_t seed);
RunResult run_single(const ExperimentConfig& config, std::uint64_t seed);

/// One row of the results table.
struct SuiteStatistics {
  std::string problem;
  double optimum = 0.0;
  ScheduleKind schedule = ScheduleKind::PseudoAdaptive;
  std::size_t n_runs = 0;
  std::size_t n_feasible = 0;
  std::size_t n_aborted = 0;
  // Over runs that found a feasible point; empty if none did.
  std::optional<double> best;
  std::optional<double> median;
  std::optional<double> mean;
  std::optional<double> worst;
  double percent_feasible = 0.0;
  double percent_successful = 0.0;
  double mean_fe = 0.0;
  double mean_ce = 0.0;
  double mean_percent_feasible_pbests = 0.0;
};

/// Aggregates runs in the given order. Infeasible runs count towards the
/// feasibility percentage but not the conflict statistics. The median of
/// an even count is the lower middle element.
SuiteStatistics aggregate_runs(const std::string& problem, double optimum, ScheduleKind schedule,
                               const std::vector<RunResult>& runs);

struct SuiteResult {
  ExperimentConfig config;
  SuiteStatistics stats;
  std::vector<RunResult> runs;  // sorted by run index
};

/// n_runs runs with seeds base_seed + run index. Runs execute on a worker
/// pool; results do not depend on the number of workers.
SuiteResult run_suite(const ExperimentConfig& config);

}  // namespace papso
