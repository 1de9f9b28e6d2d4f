#include "papso/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "papso/sampling.hpp"

namespace papso {

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::None: return "none";
    case ScheduleKind::Exponential: return "exp";
    case ScheduleKind::PseudoAdaptive: return "adaptive";
  }
  return "unknown";
}

ScheduleKind parse_schedule(const std::string& name) {
  if (name == "none") return ScheduleKind::None;
  if (name == "exp" || name == "exponential") return ScheduleKind::Exponential;
  if (name == "adaptive" || name == "pseudo-adaptive") return ScheduleKind::PseudoAdaptive;
  throw std::invalid_argument("unknown schedule '" + name + "' (expected none, exp or adaptive)");
}

std::string to_string(UpdateKind kind) {
  switch (kind) {
    case UpdateKind::None: return "none";
    case UpdateKind::Exponential: return "exponential";
    case UpdateKind::Adaptive: return "adaptive";
    case UpdateKind::Safety: return "safety";
    case UpdateKind::Endgame: return "endgame";
    case UpdateKind::Pinned: return "pinned";
  }
  return "unknown";
}

long ScheduleConfig::resolved_t_min(long t_max) const {
  return t_min > 0 ? t_min : std::lround(t_min_fraction * static_cast<double>(t_max));
}

void ScheduleConfig::validate(long t_max) const {
  auto fail = [](const std::string& msg) { throw std::domain_error("schedule config: " + msg); };
  if (!(ktol_min > 0.0 && ktol_min < 0.99)) fail("ktol_min must lie in (0, 0.99)");
  if (!(per_min > 0.0 && per_min < 100.0)) fail("per_min must lie in (0, 100)");
  if (!(ktol_fixed > 0.0 && ktol_fixed < 1.0)) fail("fixed ktol must lie in (0, 1)");
  if (!(target_fr_low < target_fr_high)) fail("target FR window must satisfy low < high");
  if (!(target_fr_low >= 0.0 && target_fr_high <= 100.0)) fail("target FR window outside [0, 100]");
  if (sampling_budget_per_probe < 1) fail("probe budget must be positive");
  if (max_probes < 1 || max_expansions < 1) fail("probe limits must be positive");
  if (kind == ScheduleKind::PseudoAdaptive) {
    const long tm = resolved_t_min(t_max);
    if (!(tm >= 1 && tm < t_max)) fail("t_min must satisfy 1 <= t_min < t_max");
  }
}

// ---------------------------------------------------------------------------

namespace {

ToleranceState tolerances_for(const Problem& problem, const ScheduleConfig& cfg, double s) {
  ToleranceState st = ToleranceState::final_state();
  if (problem.n_inequality > 0) {
    st.tol_ineq = s <= st.ineq_zero_floor ? 0.0 : s;
    if (problem.n_equality > 0) st.tol_eq = std::max(cfg.eq_over_ineq_ratio * s, st.final_tol_eq);
  } else {
    st.tol_eq = std::max(s, st.final_tol_eq);
  }
  return st;
}

double window_distance(double fr, double lo, double hi) {
  if (fr < lo) return lo - fr;
  if (fr > hi) return fr - hi;
  return 0.0;
}

}  // namespace

SelfTuneResult self_tune_initial_tolerances(const Problem& problem, const ScheduleConfig& cfg,
                                            Rng& rng) {
  if (problem.n_constraints() == 0) {
    throw std::domain_error("self-tuning needs at least one constraint (problem '" + problem.name +
                            "')");
  }
  const auto budget = static_cast<std::size_t>(cfg.sampling_budget_per_probe);
  SelfTuneResult r;
  auto probe = [&](const ToleranceState& st) {
    ++r.probes;
    r.ce += static_cast<long long>(budget);
    return estimate_feasibility_ratio(problem, st, budget, rng).percent;
  };

  r.state = ToleranceState::final_state();
  r.unrelaxed_fr = probe(r.state);
  r.achieved_fr = r.unrelaxed_fr;
  if (r.unrelaxed_fr > cfg.target_fr_high) {
    r.window_low = std::min(r.unrelaxed_fr + cfg.fr_bump_low, 100.0);
    r.window_high = std::min(r.unrelaxed_fr + cfg.fr_bump_high, 100.0);
  } else {
    r.window_low = cfg.target_fr_low;
    r.window_high = cfg.target_fr_high;
  }
  const double lo_w = r.window_low;
  const double hi_w = r.window_high;
  if (window_distance(r.unrelaxed_fr, lo_w, hi_w) == 0.0) {
    r.window_hit = true;
    return r;
  }

  double best_dist = window_distance(r.unrelaxed_fr, lo_w, hi_w);
  auto consider = [&](double s, double fr) {
    const double d = window_distance(fr, lo_w, hi_w);
    if (d < best_dist || d == 0.0) {
      best_dist = d;
      r.state = tolerances_for(problem, cfg, s);
      r.achieved_fr = fr;
    }
    return d == 0.0;
  };

  // Expansion: find s_low with FR below the window and s_high above it.
  double s = cfg.initial_probe_tolerance;
  double fr = probe(tolerances_for(problem, cfg, s));
  if (consider(s, fr)) {
    r.window_hit = true;
    return r;
  }
  double s_low;
  double s_high;
  if (fr < lo_w) {
    for (int e = 0; e < cfg.max_expansions && fr < lo_w; ++e) {
      s *= 10.0;
      fr = probe(tolerances_for(problem, cfg, s));
      consider(s, fr);
    }
    if (fr < lo_w) {
      r.window_hit = best_dist == 0.0;
      return r;
    }
    s_low = s / 10.0;
    s_high = s;
  } else {
    for (int e = 0; e < cfg.max_expansions && fr > hi_w; ++e) {
      s /= 10.0;
      fr = probe(tolerances_for(problem, cfg, s));
      consider(s, fr);
    }
    if (fr > hi_w) {
      r.window_hit = best_dist == 0.0;
      return r;
    }
    s_low = s;
    s_high = s * 10.0;
  }

  // Geometric bisection between the brackets.
  for (int p = 0; p < cfg.max_probes; ++p) {
    const double mid = std::sqrt(s_low * s_high);
    fr = probe(tolerances_for(problem, cfg, mid));
    if (consider(mid, fr)) {
      r.window_hit = true;
      return r;
    }
    if (fr < lo_w) {
      s_low = mid;
    } else {
      s_high = mid;
    }
  }
  r.window_hit = best_dist == 0.0;
  return r;
}

// ---------------------------------------------------------------------------

double pseudo_adaptive_coefficient(double per, const ScheduleConfig& cfg) {
  if (per > 100.0) {
    std::ostringstream os;
    os << "percentage of feasible pbests " << per << " exceeds 100";
    throw std::domain_error(os.str());
  }
  return (0.99 - cfg.ktol_min) / (100.0 - cfg.per_min) * (100.0 - per) + cfg.ktol_min;
}

ToleranceState apply_tolerance_update(const ToleranceState& state, double ktol_ineq,
                                      double ktol_eq) {
  if (!(ktol_ineq > 0.0 && ktol_ineq <= 1.0) || !(ktol_eq > 0.0 && ktol_eq <= 1.0)) {
    throw std::domain_error("tolerance update coefficient must lie in (0, 1]");
  }
  ToleranceState next = state;
  const double ineq = ktol_ineq * state.tol_ineq;
  next.tol_ineq = ineq <= state.ineq_zero_floor ? 0.0 : ineq;
  next.tol_eq = std::max(ktol_eq * state.tol_eq, state.final_tol_eq);
  ++next.n_updates;
  return next;
}

ToleranceState apply_tolerance_update(const ToleranceState& state, double ktol) {
  return apply_tolerance_update(state, ktol, ktol);
}

bool safety_update_due(long t, long n_updates, const ScheduleConfig& cfg) {
  return static_cast<double>(t) / static_cast<double>(std::max(1L, n_updates)) >= cfg.safety_ratio;
}

double endgame_coefficient(double tol_at_start, double tol_final, long t_min) {
  if (tol_at_start <= tol_final) return 1.0;
  const long steps = std::max(1L, std::lround(0.1 * static_cast<double>(t_min)));
  return std::pow(tol_final / tol_at_start, 1.0 / static_cast<double>(steps));
}

ScheduleStep schedule_step(const ToleranceState& state, long t, long t_max,
                           double per_feasible_pbests, const ScheduleConfig& cfg) {
  ScheduleStep out{state, UpdateKind::None};
  switch (cfg.kind) {
    case ScheduleKind::None:
      return out;
    case ScheduleKind::Exponential:
      out.state = apply_tolerance_update(state, cfg.ktol_fixed);
      out.update = UpdateKind::Exponential;
      return out;
    case ScheduleKind::PseudoAdaptive:
      break;
  }

  const long t_min = cfg.resolved_t_min(t_max);
  const long endgame_start = std::lround(0.9 * static_cast<double>(t_min));
  ToleranceState& s = out.state;

  if (t > endgame_start && t <= t_min && !s.at_final()) {
    if (!s.endgame_ktol_ineq) {
      s.endgame_ktol_ineq = endgame_coefficient(s.tol_ineq, s.ineq_zero_floor, t_min);
      s.endgame_ktol_eq = endgame_coefficient(s.tol_eq, s.final_tol_eq, t_min);
    }
    s = apply_tolerance_update(s, *s.endgame_ktol_ineq, *s.endgame_ktol_eq);
    out.update = UpdateKind::Endgame;
  } else if (per_feasible_pbests >= cfg.per_min) {
    s = apply_tolerance_update(s, pseudo_adaptive_coefficient(per_feasible_pbests, cfg));
    out.update = UpdateKind::Adaptive;
  } else if (safety_update_due(t, s.n_updates, cfg)) {
    s = apply_tolerance_update(s, cfg.safety_ktol);
    out.update = UpdateKind::Safety;
  }

  if (t >= t_min && !s.at_final()) {
    s.tol_ineq = 0.0;
    s.tol_eq = s.final_tol_eq;
    if (out.update == UpdateKind::None) out.update = UpdateKind::Pinned;
  }
  return out;
}

}  // namespace papso
