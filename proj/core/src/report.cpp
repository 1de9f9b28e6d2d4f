#include "papso/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace papso {

namespace fs = std::filesystem;

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string conflict_cell(const std::optional<double>& v) {
  return v ? fmt("%.6f", *v) : std::string("-");
}

std::string exact(double v) { return std::isnan(v) ? std::string("nan") : fmt("%.17g", v); }

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw OutputError("failed writing " + path.string());
}

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

}  // namespace

void prepare_output_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir / "traces", ec);
  if (ec) throw OutputError("cannot create output directory " + dir.string() + ": " + ec.message());
  const fs::path probe = dir / ".write_test";
  {
    std::ofstream out(probe);
    if (!out || !(out << "ok")) throw OutputError("output directory " + dir.string() + " is not writable");
  }
  fs::remove(probe, ec);
}

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> cols = {
      "Problem", "Optimum", "Type of tolerance relaxation", "BEST", "MEDIAN", "MEAN", "WORST",
      "[%] Feasible Solutions", "[%] Successful Solutions", "Mean FEs", "Mean CEs",
      "Mean [%] Feasible PBESTs"};
  return cols;
}

std::string relaxation_label(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::None: return "NONE";
    case ScheduleKind::Exponential: return "EXP.";
    case ScheduleKind::PseudoAdaptive: return "ADAPTIVE";
  }
  return "?";
}

std::string format_summary(const std::vector<SuiteStatistics>& rows) {
  std::string out = join(summary_columns()) + "\n";
  for (const auto& r : rows) {
    out += join({r.problem, fmt("%.6f", r.optimum), relaxation_label(r.schedule),
                 conflict_cell(r.best), conflict_cell(r.median), conflict_cell(r.mean),
                 conflict_cell(r.worst), fmt("%.2f", r.percent_feasible),
                 fmt("%.2f", r.percent_successful), fmt("%.2E", r.mean_fe), fmt("%.2E", r.mean_ce),
                 fmt("%.2f", r.mean_percent_feasible_pbests)});
    out += '\n';
  }
  return out;
}

const std::vector<std::string>& trace_columns() {
  static const std::vector<std::string> cols = {"t",
                                                "tol_ineq",
                                                "tol_eq",
                                                "percent_feasible_pbests",
                                                "best_feasible_conflict",
                                                "mean_pbest_conflict"};
  return cols;
}

std::string format_trace(const std::vector<StepRecord>& trace) {
  std::ostringstream os;
  os << join(trace_columns()) << '\n';
  for (const auto& r : trace) {
    os << r.t << ',' << exact(r.tol_ineq) << ',' << exact(r.tol_eq) << ','
       << exact(r.percent_feasible_pbests) << ',' << exact(r.best_feasible_conflict) << ','
       << exact(r.mean_pbest_conflict) << '\n';
  }
  return os.str();
}

std::vector<StepRecord> averaged_trace(const std::vector<RunResult>& runs) {
  std::vector<StepRecord> mean;
  if (runs.empty()) return mean;
  const std::size_t steps = runs.front().trace.size();
  for (const auto& r : runs) {
    if (r.trace.size() != steps) {
      throw std::invalid_argument("cannot average traces of different lengths");
    }
  }
  mean.resize(steps);
  const auto n = static_cast<double>(runs.size());
  for (std::size_t k = 0; k < steps; ++k) {
    StepRecord& m = mean[k];
    m.t = runs.front().trace[k].t;
    double best_sum = 0.0;
    double found_sum = 0.0;
    std::size_t best_n = 0;
    std::size_t found_n = 0;
    for (const auto& r : runs) {
      const StepRecord& s = r.trace[k];
      m.tol_ineq += s.tol_ineq;
      m.tol_eq += s.tol_eq;
      m.percent_feasible_pbests += s.percent_feasible_pbests;
      m.mean_pbest_conflict += s.mean_pbest_conflict;
      if (!std::isnan(s.best_feasible_conflict)) {
        best_sum += s.best_feasible_conflict;
        ++best_n;
      }
      if (!std::isnan(s.best_found)) {
        found_sum += s.best_found;
        ++found_n;
      }
    }
    m.tol_ineq /= n;
    m.tol_eq /= n;
    m.percent_feasible_pbests /= n;
    m.mean_pbest_conflict /= n;
    m.best_feasible_conflict = best_n ? best_sum / static_cast<double>(best_n) : std::nan("");
    m.best_found = found_n ? found_sum / static_cast<double>(found_n) : std::nan("");
  }
  return mean;
}

std::string format_runs(const std::vector<SuiteResult>& suites) {
  std::string out = join({"problem", "schedule", "run", "seed", "found_feasible", "success",
                          "best_conflict", "error", "fe", "ce", "final_percent_feasible_pbests",
                          "initial_tol_ineq", "initial_tol_eq", "probes", "probe_fr", "failure"}) +
                    "\n";
  for (const auto& s : suites) {
    for (std::size_t k = 0; k < s.runs.size(); ++k) {
      const RunResult& r = s.runs[k];
      std::string failure = r.failure.value_or("");
      for (char& c : failure) {
        if (c == ',' || c == '\n') c = ';';
      }
      out += join({s.stats.problem, to_string(s.stats.schedule), std::to_string(k),
                   std::to_string(r.seed), r.found_feasible ? "1" : "0", r.success ? "1" : "0",
                   exact(r.best_conflict), exact(r.error), std::to_string(r.fe),
                   std::to_string(r.ce), exact(r.final_percent_feasible_pbests),
                   exact(r.initial_tolerances.tol_ineq), exact(r.initial_tolerances.tol_eq),
                   std::to_string(r.self_tune ? r.self_tune->probes : 0),
                   r.self_tune ? exact(r.self_tune->achieved_fr) : std::string("nan"), failure});
      out += '\n';
    }
  }
  return out;
}

void emit_reports(const std::vector<SuiteResult>& suites, const fs::path& dir) {
  prepare_output_directory(dir);
  std::vector<SuiteStatistics> rows;
  rows.reserve(suites.size());
  for (const auto& s : suites) rows.push_back(s.stats);
  write_file(dir / "summary.csv", format_summary(rows));
  write_file(dir / "runs.csv", format_runs(suites));

  for (const auto& s : suites) {
    if (!s.config.record_traces) continue;
    const std::string stem = s.stats.problem + "_" + to_string(s.stats.schedule);
    for (std::size_t k = 0; k < s.runs.size(); ++k) {
      char idx[16];
      std::snprintf(idx, sizeof idx, "%02zu", k);
      write_file(dir / "traces" / (stem + "_run" + idx + ".csv"), format_trace(s.runs[k].trace));
    }
    write_file(dir / "traces" / (stem + "_mean.csv"), format_trace(averaged_trace(s.runs)));
  }
}

std::string format_metadata_table(const std::vector<BenchmarkMetadata>& rows) {
  auto fr = [](const std::optional<double>& v) { return v ? fmt("%.4f", *v) : std::string("< 0.0001"); };
  auto tol = [](const std::optional<double>& v) { return v ? fmt("%.2f", *v) : std::string("N/A"); };
  std::string out =
      join({"Problem", "Optimum", "Dim.", "IC", "EC", "FR [%]", "FR [%] for desired tolerance",
            "FR [%] for initial tolerance", "Mean initial inequality tolerance",
            "Mean initial equality tolerance"}) +
      "\n";
  for (const auto& m : rows) {
    out += join({m.name, fmt("%.6f", m.optimum), std::to_string(m.dimension),
                 std::to_string(m.n_inequality), std::to_string(m.n_equality),
                 fr(m.fr_no_tolerance), fr(m.fr_desired_tolerance),
                 fmt("%.4f", m.fr_initial_tolerance), tol(m.mean_initial_tol_ineq),
                 tol(m.mean_initial_tol_eq)});
    out += '\n';
  }
  return out;
}

}  // namespace papso
