#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "papso/gsuite.hpp"
#include "papso/harness.hpp"

namespace papso {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Creates `dir` (and dir/traces) and checks it is writable. Throws
/// OutputError otherwise. Call before starting any computation.
void prepare_output_directory(const std::filesystem::path& dir);

/// Column names of the results table, in order.
const std::vector<std::string>& summary_columns();
/// Label used in the results table: NONE, EXP. or ADAPTIVE.
std::string relaxation_label(ScheduleKind kind);

/// Comma-separated results table with a header row. Conflicts use 6
/// decimals, evaluation counts scientific notation with 2 decimals, and
/// statistics of problems without feasible runs are written as "-".
std::string format_summary(const std::vector<SuiteStatistics>& rows);

/// Columns of per-step trace files.
const std::vector<std::string>& trace_columns();
std::string format_trace(const std::vector<StepRecord>& trace);

/// Arithmetic mean over runs at each time-step. NaN entries (no feasible
/// pbest yet) are skipped; a step where every run is NaN stays NaN.
std::vector<StepRecord> averaged_trace(const std::vector<RunResult>& runs);

/// One row per run of every suite: outcome, budgets and initial tolerances.
std::string format_runs(const std::vector<SuiteResult>& suites);

/// Writes dir/summary.csv, dir/runs.csv, dir/traces/<problem>_<schedule>_run<k>.csv and
/// dir/traces/<problem>_<schedule>_mean.csv.
void emit_reports(const std::vector<SuiteResult>& suites, const std::filesystem::path& dir);

/// Feature table of the benchmark problems, comma-separated.
std::string format_metadata_table(const std::vector<BenchmarkMetadata>& rows);

}  // namespace papso
