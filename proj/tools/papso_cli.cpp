// papso: run the constrained PSO experiments, estimate feasibility ratios and
// list the benchmark problems.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "papso/gsuite.hpp"
#include "papso/harness.hpp"
#include "papso/random.hpp"
#include "papso/report.hpp"
#include "papso/sampling.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunPlan {
  std::vector<std::string> problems{"g01"};
  std::vector<papso::ScheduleKind> schedules{papso::ScheduleKind::PseudoAdaptive};
  papso::ExperimentConfig base;
  fs::path out;
};

std::vector<std::string> expand_problems(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") return papso::benchmark_names();
    const auto& valid = papso::benchmark_names();
    if (std::find(valid.begin(), valid.end(), n) == valid.end()) {
      throw ConfigError("unknown problem '" + n + "' (expected g01..g13 or all)");
    }
    out.push_back(n);
  }
  return out;
}

std::vector<papso::ScheduleKind> expand_schedules(const std::vector<std::string>& names) {
  std::vector<papso::ScheduleKind> out;
  for (const auto& n : names) {
    if (n == "all") {
      return {papso::ScheduleKind::None, papso::ScheduleKind::Exponential,
              papso::ScheduleKind::PseudoAdaptive};
    }
    try {
      out.push_back(papso::parse_schedule(n));
    } catch (const std::exception&) {
      throw ConfigError("unknown schedule '" + n + "' (expected none, exp, adaptive or all)");
    }
  }
  return out;
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("--target-fr expects LO,HI");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, comma);
    const std::string hi_text = text.substr(comma + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("--target-fr expects two numbers, got '" + text + "'");
  }
}

std::vector<std::string> string_list(const json& v, const char* key) {
  if (v.is_string()) return {v.get<std::string>()};
  if (v.is_array()) return v.get<std::vector<std::string>>();
  throw ConfigError(std::string("config key '") + key + "' must be a string or list of strings");
}

void apply_config_file(const fs::path& path, RunPlan& plan) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");

  auto& cfg = plan.base;
  auto& sched = cfg.schedule;
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "problem") plan.problems = expand_problems(string_list(v, "problem"));
      else if (key == "schedule") plan.schedules = expand_schedules(string_list(v, "schedule"));
      else if (key == "runs") cfg.n_runs = v.get<std::size_t>();
      else if (key == "particles") cfg.n_particles = v.get<std::size_t>();
      else if (key == "steps") cfg.t_max = v.get<long>();
      else if (key == "seed") cfg.base_seed = v.get<std::uint64_t>();
      else if (key == "out") plan.out = v.get<std::string>();
      else if (key == "threads") cfg.threads = v.get<unsigned>();
      else if (key == "traces") cfg.record_traces = v.get<bool>();
      else if (key == "links") cfg.links_per_particle = v.get<std::size_t>();
      else if (key == "lh_candidates") cfg.lh_candidates = v.get<std::size_t>();
      else if (key == "success_threshold") cfg.success_threshold = v.get<double>();
      else if (key == "penalty_k") cfg.penalty.k = v.get<double>();
      else if (key == "probe_budget") sched.sampling_budget_per_probe = v.get<int>();
      else if (key == "target_fr") {
        const auto w = v.get<std::vector<double>>();
        if (w.size() != 2) throw ConfigError("config key 'target_fr' needs [lo, hi]");
        sched.target_fr_low = w[0];
        sched.target_fr_high = w[1];
      }
      else if (key == "t_min") sched.t_min = v.get<long>();
      else if (key == "ktol_fixed") sched.ktol_fixed = v.get<double>();
      else if (key == "ktol_min") sched.ktol_min = v.get<double>();
      else if (key == "per_min") sched.per_min = v.get<double>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
}

struct RunFlags {
  std::string config;
  std::optional<std::vector<std::string>> problems;
  std::optional<std::vector<std::string>> schedules;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> particles;
  std::optional<long> steps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> probe_budget;
  std::optional<std::string> target_fr;
  std::optional<unsigned> threads;
  bool no_traces = false;
};

RunPlan resolve_plan(const RunFlags& f) {
  RunPlan plan;
  if (!f.config.empty()) apply_config_file(f.config, plan);
  auto& cfg = plan.base;
  if (f.problems) plan.problems = expand_problems(*f.problems);
  if (f.schedules) plan.schedules = expand_schedules(*f.schedules);
  if (f.runs) cfg.n_runs = *f.runs;
  if (f.particles) cfg.n_particles = *f.particles;
  if (f.steps) cfg.t_max = *f.steps;
  if (f.seed) cfg.base_seed = *f.seed;
  if (f.out) plan.out = *f.out;
  if (f.probe_budget) cfg.schedule.sampling_budget_per_probe = *f.probe_budget;
  if (f.target_fr) {
    const auto [lo, hi] = parse_window(*f.target_fr);
    cfg.schedule.target_fr_low = lo;
    cfg.schedule.target_fr_high = hi;
  }
  if (f.threads) cfg.threads = *f.threads;
  if (f.no_traces) cfg.record_traces = false;

  if (plan.out.empty()) throw ConfigError("no output directory given (--out)");
  if (plan.problems.empty() || plan.schedules.empty()) {
    throw ConfigError("nothing to run: empty problem or schedule list");
  }
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return plan;
}

int do_run(const RunFlags& flags) {
  RunPlan plan;
  try {
    plan = resolve_plan(flags);
  } catch (const ConfigError& e) {
    std::cerr << "papso: configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    papso::prepare_output_directory(plan.out);
  } catch (const papso::OutputError& e) {
    std::cerr << "papso: " << e.what() << '\n';
    return kExitIo;
  }

  std::vector<papso::SuiteResult> suites;
  for (const auto& name : plan.problems) {
    for (const auto kind : plan.schedules) {
      papso::ExperimentConfig cfg = plan.base;
      cfg.problem = name;
      cfg.schedule.kind = kind;
      std::cerr << name << ' ' << papso::to_string(kind) << ": " << cfg.n_runs << " runs\n";
      suites.push_back(papso::run_suite(cfg));
      const auto& s = suites.back().stats;
      if (s.n_aborted != 0) {
        std::cerr << "  " << s.n_aborted << " runs aborted:";
        for (const auto& r : suites.back().runs) {
          if (r.failure) std::cerr << "\n    seed " << r.seed << ": " << *r.failure;
        }
        std::cerr << '\n';
      }
    }
  }

  try {
    papso::emit_reports(suites, plan.out);
  } catch (const papso::OutputError& e) {
    std::cerr << "papso: " << e.what() << '\n';
    return kExitIo;
  }
  std::vector<papso::SuiteStatistics> rows;
  for (const auto& s : suites) rows.push_back(s.stats);
  std::cout << papso::format_summary(rows);
  return 0;
}

struct FrFlags {
  std::string problem = "g01";
  double tol_ineq = 0.0;
  double tol_eq = 0.0;
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
};

int do_fr(const FrFlags& f) {
  papso::BenchmarkProblem bench;
  try {
    bench = papso::get_problem(f.problem);
    if (f.tol_ineq < 0.0 || f.tol_eq < 0.0) throw std::domain_error("tolerances must be >= 0");
    if (f.samples == 0) throw std::domain_error("--samples must be positive");
  } catch (const std::exception& e) {
    std::cerr << "papso: configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  papso::ToleranceState tol;
  tol.tol_ineq = f.tol_ineq;
  tol.tol_eq = f.tol_eq;
  papso::Rng rng = papso::make_stream(f.seed, papso::Stream::Sampling);
  const auto est = papso::estimate_feasibility_ratio(bench.problem, tol, f.samples, rng);
  std::printf("problem,tol_ineq,tol_eq,samples,feasible,fr_percent\n");
  std::printf("%s,%.6g,%.6g,%zu,%zu,%.4f\n", f.problem.c_str(), f.tol_ineq, f.tol_eq, est.samples,
              est.feasible, est.percent);
  return 0;
}

int do_problems() {
  std::vector<papso::BenchmarkMetadata> rows;
  for (auto& b : papso::all_problems()) rows.push_back(b.metadata);
  std::cout << papso::format_metadata_table(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained particle swarm optimization with relaxed tolerances"};
  app.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "Run experiments and write reports");
  run_cmd->add_option("--config", run.config, "JSON config file; flags override its values")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--problem", run.problems, "g01..g13 or all")->delimiter(',');
  run_cmd->add_option("--schedule", run.schedules, "none, exp, adaptive or all")->delimiter(',');
  run_cmd->add_option("--runs", run.runs, "Runs per problem and schedule (25)");
  run_cmd->add_option("--particles", run.particles, "Swarm size (50)");
  run_cmd->add_option("--steps", run.steps, "Time-steps per run (10000)");
  run_cmd->add_option("--seed", run.seed, "Base seed; run k uses seed + k (1)");
  run_cmd->add_option("--out", run.out, "Output directory");
  run_cmd->add_option("--probe-budget", run.probe_budget, "Samples per self-tuning probe (1000)");
  run_cmd->add_option("--target-fr", run.target_fr, "Self-tuning FR window in percent (20,25)");
  run_cmd->add_option("--threads", run.threads, "Worker threads (0: all cores)");
  run_cmd->add_flag("--no-traces", run.no_traces, "Skip per-step trace files");

  FrFlags fr;
  auto* fr_cmd = app.add_subcommand("fr", "Estimate a feasibility ratio by uniform sampling");
  fr_cmd->add_option("--problem", fr.problem, "g01..g13")->required();
  fr_cmd->add_option("--tol-ineq", fr.tol_ineq, "Inequality tolerance (0)");
  fr_cmd->add_option("--tol-eq", fr.tol_eq, "Equality tolerance (0)");
  fr_cmd->add_option("--samples", fr.samples, "Number of samples (1000000)");
  fr_cmd->add_option("--seed", fr.seed, "Seed (1)");

  auto* problems_cmd = app.add_subcommand("problems", "Print the benchmark feature table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*run_cmd) return do_run(run);
  if (*fr_cmd) return do_fr(fr);
  if (*problems_cmd) return do_problems();
  return kExitConfig;
}
