#pragma once

#include <string>

#include "papso/constraints.hpp"
#include "papso/random.hpp"

namespace papso {

enum class ScheduleKind { None, Exponential, PseudoAdaptive };

std::string to_string(ScheduleKind kind);
/// Accepts "none", "exp" / "exponential", "adaptive" / "pseudo-adaptive".
ScheduleKind parse_schedule(const std::string& name);

struct ScheduleConfig {
  ScheduleKind kind = ScheduleKind::PseudoAdaptive;
  double ktol_fixed = 0.98;
  double ktol_min = 0.90;
  double per_min = 80.0;
  long t_min = 0;  // 0 selects round(t_min_fraction * t_max)
  double t_min_fraction = 0.80;
  double target_fr_low = 20.0;
  double target_fr_high = 25.0;
  double fr_bump_low = 4.0;   // window used when the unrelaxed FR already
  double fr_bump_high = 6.0;  // exceeds target_fr_high: [FR0 + low, FR0 + high]
  double eq_over_ineq_ratio = 10.0;
  double safety_ratio = 20.0;
  double safety_ktol = 0.99;
  int sampling_budget_per_probe = 1000;
  int max_probes = 40;
  int max_expansions = 30;
  double initial_probe_tolerance = 1e-4;

  [[nodiscard]] long resolved_t_min(long t_max) const;
  /// Throws std::domain_error on inconsistent parameters.
  void validate(long t_max) const;
};

// ---------------------------------------------------------------------------
// Self-tuned initial relaxation

struct SelfTuneResult {
  ToleranceState state;
  double unrelaxed_fr = 0.0;   // percent, at the final tolerances
  double achieved_fr = 0.0;    // percent, probe estimate at the returned tolerances
  double window_low = 0.0;
  double window_high = 0.0;
  int probes = 0;              // including the unrelaxed probe
  long long ce = 0;            // probes * sampling_budget_per_probe
  bool window_hit = false;     // false: nearest probe returned
};

/// Searches for initial tolerances whose Monte-Carlo feasibility ratio lies in
/// the target window. The search variable is tol_ineq when the problem has
/// inequality constraints (tol_eq tied to it by eq_over_ineq_ratio), else
/// tol_eq. Expands by factors of 10 from initial_probe_tolerance until the
/// window is reached or passed, then bisects the last decade geometrically
/// until a probe lands in the window.
SelfTuneResult self_tune_initial_tolerances(const Problem& problem, const ScheduleConfig& cfg,
                                            Rng& rng);

// ---------------------------------------------------------------------------
// Decrease schedules

/// Linear from 0.99 at per = per_min to ktol_min at per = 100.
double pseudo_adaptive_coefficient(double per, const ScheduleConfig& cfg);

/// tol <- ktol * tol for each kind, with the equality floor and the
/// inequality snap to zero. Increments n_updates.
ToleranceState apply_tolerance_update(const ToleranceState& state, double ktol_ineq,
                                      double ktol_eq);
ToleranceState apply_tolerance_update(const ToleranceState& state, double ktol);

/// Forced update when t / max(1, n_updates) >= safety_ratio.
bool safety_update_due(long t, long n_updates, const ScheduleConfig& cfg);

/// (tol_final / tol_start)^(1 / round(0.1 t_min)); 1 when already at target.
double endgame_coefficient(double tol_at_start, double tol_final, long t_min);

enum class UpdateKind { None, Exponential, Adaptive, Safety, Endgame, Pinned };

std::string to_string(UpdateKind kind);

struct ScheduleStep {
  ToleranceState state;
  UpdateKind update = UpdateKind::None;
};

/// One schedule transition, called once per time-step after the pbest update.
ScheduleStep schedule_step(const ToleranceState& state, long t, long t_max,
                           double per_feasible_pbests, const ScheduleConfig& cfg);

/// Per-step record for tolerance traces.
struct ToleranceTraceRecord {
  long t = 0;
  double tol_ineq = 0.0;
  double tol_eq = 0.0;
  double per_feasible_pbests = 0.0;
  UpdateKind update = UpdateKind::None;
};

}  // namespace papso
