#include "papso/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "papso/random.hpp"
#include "papso/sampling.hpp"

namespace papso {

std::vector<CoefficientSet> default_coefficient_sets(double ip) {
  return {rrr2_coefficients(2.40, ip), rrr1_coefficients(1.80, ip),
          classical_coefficients(0.7298, 2.9922 / 2.0, 2.9922 / 2.0)};
}

void ExperimentConfig::validate() const {
  if (n_particles == 0) throw std::domain_error("n_particles must be positive");
  if (t_max < 2) throw std::domain_error("t_max must be at least 2");
  if (n_runs == 0) throw std::domain_error("n_runs must be positive");
  if (lh_candidates == 0) throw std::domain_error("lh_candidates must be positive");
  if (n_subgroups == 0 || n_subgroups > n_particles) {
    throw std::domain_error("n_subgroups must lie in [1, n_particles]");
  }
  if (coefficients.size() < n_subgroups) {
    throw std::domain_error("need one coefficient set per sub-neighbourhood");
  }
  schedule.validate(t_max);
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct BestTracker {
  const Problem* problem;
  ToleranceState final_tol;
  bool found = false;
  double conflict = std::numeric_limits<double>::infinity();
  std::vector<double> position;

  void observe(std::span<const double> x, const PointEvaluation& e) {
    if (e.bound != 0.0 || !(e.conflict < conflict)) return;
    if (!is_feasible(*problem, e.raw_constraints, x, final_tol)) return;
    found = true;
    conflict = e.conflict;
    position.assign(x.begin(), x.end());
  }
};

StepRecord make_record(long t, const ToleranceState& tol, const Swarm& swarm,
                       const BestTracker& best, UpdateKind update) {
  StepRecord r;
  r.t = t;
  r.tol_ineq = tol.tol_ineq;
  r.tol_eq = tol.tol_eq;
  r.percent_feasible_pbests = swarm.percent_feasible_pbests();
  r.best_feasible_conflict = kNaN;
  double sum = 0.0;
  for (const auto& p : swarm.particles) {
    sum += p.pbest_conflict;
    if (p.pbest_feasible &&
        (std::isnan(r.best_feasible_conflict) || p.pbest_conflict < r.best_feasible_conflict)) {
      r.best_feasible_conflict = p.pbest_conflict;
    }
  }
  r.mean_pbest_conflict = sum / static_cast<double>(swarm.size());
  r.best_found = best.found ? best.conflict : kNaN;
  r.update = update;
  return r;
}

bool same_tolerances(const ToleranceState& a, const ToleranceState& b) {
  return a.tol_ineq == b.tol_ineq && a.tol_eq == b.tol_eq;
}

}  // namespace

RunResult run_single(const ExperimentConfig& config, const BenchmarkProblem& bench,
                     std::uint64_t seed) {
  config.validate();
  const Problem& problem = bench.problem;
  RunResult result;
  result.seed = seed;

  EvalCounters counters;
  ToleranceState tol = ToleranceState::final_state();
  BestTracker best{&problem, ToleranceState::final_state(), false,
                   std::numeric_limits<double>::infinity(), {}};
  try {
    if (config.schedule.kind != ScheduleKind::None) {
      Rng tune_rng = make_stream(seed, Stream::SelfTuning);
      SelfTuneResult tuned = self_tune_initial_tolerances(problem, config.schedule, tune_rng);
      counters.ce += tuned.ce;
      tol = tuned.state;
      result.self_tune = std::move(tuned);
    }
    result.initial_tolerances = tol;

    const PenalizedEvaluator evaluator(problem, config.penalty);
    const PointEvaluator evaluate = [&](std::span<const double> x) {
      PointEvaluation e = evaluator.evaluate(x, tol, counters);
      best.observe(x, e);
      return e;
    };

    const Topology topology =
        build_forward_topology(config.n_particles, config.n_subgroups, config.links_per_particle);
    Rng init_rng = make_stream(seed, Stream::Initialization);
    const MaximinResult init = latin_hypercube_init(config.n_particles, problem_bounds(problem),
                                                    config.lh_candidates, init_rng);
    Rng dyn_rng = make_stream(seed, Stream::Dynamics);

    // The initial evaluation takes the place of the first time-step: with
    // zero velocities it is the budget of step 1.
    Swarm swarm = initialize_swarm(init.positions, topology, evaluate);
    if (config.record_traces) result.trace.reserve(static_cast<std::size_t>(config.t_max));
    for (long t = 1; t <= config.t_max; ++t) {
      if (t > 1) step_swarm(swarm, topology, config.coefficients, evaluate, dyn_rng);
      const double per = swarm.percent_feasible_pbests();
      const ScheduleStep next = schedule_step(tol, t, config.t_max, per, config.schedule);
      const bool changed = !same_tolerances(next.state, tol);
      tol = next.state;
      if (changed) repenalize_pbests(swarm, topology, evaluator, tol);
      if (config.record_traces) {
        result.trace.push_back(make_record(t, tol, swarm, best, next.update));
      }
    }
    result.final_percent_feasible_pbests = swarm.percent_feasible_pbests();
  } catch (const std::exception& e) {
    result.failure = e.what();
  }

  result.fe = counters.fe;
  result.ce = counters.ce;
  result.saturations = counters.saturations;
  result.found_feasible = best.found;
  if (best.found) {
    result.best_conflict = best.conflict;
    result.best_position = best.position;
    result.error = best.conflict - problem.known_optimum;
    result.success = std::abs(result.error) <= config.success_threshold;
  } else {
    result.best_conflict = kNaN;
    result.error = kNaN;
  }
  return result;
}

RunResult run_single(const ExperimentConfig& config, std::uint64_t seed) {
  return run_single(config, get_problem(config.problem), seed);
}

SuiteStatistics aggregate_runs(const std::string& problem, double optimum, ScheduleKind schedule,
                               const std::vector<RunResult>& runs) {
  SuiteStatistics s;
  s.problem = problem;
  s.optimum = optimum;
  s.schedule = schedule;
  s.n_runs = runs.size();
  if (runs.empty()) return s;

  std::vector<double> conflicts;
  std::size_t successes = 0;
  double fe = 0.0;
  double ce = 0.0;
  double per = 0.0;
  for (const auto& r : runs) {
    if (r.failure) ++s.n_aborted;
    if (r.found_feasible) conflicts.push_back(r.best_conflict);
    if (r.success) ++successes;
    fe += static_cast<double>(r.fe);
    ce += static_cast<double>(r.ce);
    per += r.final_percent_feasible_pbests;
  }
  const auto n = static_cast<double>(runs.size());
  s.n_feasible = conflicts.size();
  s.percent_feasible = 100.0 * static_cast<double>(conflicts.size()) / n;
  s.percent_successful = 100.0 * static_cast<double>(successes) / n;
  s.mean_fe = fe / n;
  s.mean_ce = ce / n;
  s.mean_percent_feasible_pbests = per / n;
  if (!conflicts.empty()) {
    std::vector<double> sorted = conflicts;
    std::sort(sorted.begin(), sorted.end());
    s.best = sorted.front();
    s.worst = sorted.back();
    s.median = sorted[(sorted.size() - 1) / 2];
    s.mean = std::accumulate(conflicts.begin(), conflicts.end(), 0.0) /
             static_cast<double>(conflicts.size());
  }
  return s;
}

SuiteResult run_suite(const ExperimentConfig& config) {
  config.validate();
  const BenchmarkProblem bench = get_problem(config.problem);
  SuiteResult out;
  out.config = config;
  out.runs.resize(config.n_runs);

  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(config.n_runs));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.n_runs; i = next++) {
      out.runs[i] = run_single(config, bench, config.base_seed + i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  out.stats = aggregate_runs(bench.problem.name, bench.problem.known_optimum, config.schedule.kind,
                             out.runs);
  return out;
}

}  // namespace papso
