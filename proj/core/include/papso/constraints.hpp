#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace papso {

using ObjectiveFn = std::function<double(std::span<const double>)>;
/// Evaluates the whole constraint set at once: inequalities first, then
/// equalities. One call is one constraint evaluation (CE).
using ConstraintSetFn = std::function<void(std::span<const double>, std::span<double>)>;

/// Minimize f(x) subject to g_j(x) <= 0 (j < q), g_j(x) = 0 (q <= j < q + r)
/// and l_i <= x_i <= u_i.
struct Problem {
  std::string name;
  std::vector<double> lower;
  std::vector<double> upper;
  std::size_t n_inequality = 0;
  std::size_t n_equality = 0;
  ObjectiveFn objective;
  ConstraintSetFn constraints;
  double known_optimum = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> reference_point;  // validation only; empty if unknown

  [[nodiscard]] std::size_t dimension() const { return lower.size(); }
  [[nodiscard]] std::size_t n_constraints() const { return n_inequality + n_equality; }

  /// Throws std::domain_error unless bounds are well formed and callables set.
  void validate() const;
};

inline constexpr double kFinalEqualityTolerance = 1e-4;
inline constexpr double kInequalityZeroFloor = 1e-5;

/// Current constraint-violation tolerances plus the bookkeeping the decrease
/// schedules need. tol_ineq never lies in (0, ineq_zero_floor]; tol_eq never
/// drops below final_tol_eq.
struct ToleranceState {
  double tol_ineq = 0.0;
  double tol_eq = kFinalEqualityTolerance;
  long n_updates = 0;
  double final_tol_eq = kFinalEqualityTolerance;
  double ineq_zero_floor = kInequalityZeroFloor;
  // Per-step coefficients of the forced end-of-schedule decrease, fixed on
  // entry to that window. Empty until then.
  std::optional<double> endgame_ktol_ineq;
  std::optional<double> endgame_ktol_eq;

  [[nodiscard]] bool at_final() const {
    return tol_ineq == 0.0 && tol_eq <= final_tol_eq;
  }
  /// Tolerances of the original, unrelaxed problem.
  static ToleranceState final_state(double final_tol_eq = kFinalEqualityTolerance);
};

enum class PenaltyScheme { StaticAdditive, ProposedConstant };

struct PenaltyConfig {
  PenaltyScheme scheme = PenaltyScheme::ProposedConstant;
  double k = 1e6;
  double alpha_threshold = 1.0;  // alpha = 2 for violations >= threshold, else 1
  std::vector<double> static_k;      // StaticAdditive: one per term
  std::vector<double> static_alpha;  // StaticAdditive: one per term

  void validate(std::size_t n_terms) const;
};

/// Penalized conflicts saturate here instead of overflowing.
inline constexpr double kConflictSentinel = 1e300;

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::size_t constraint_index, std::vector<double> x)
      : std::runtime_error(what), constraint_index_(constraint_index), x_(std::move(x)) {}
  [[nodiscard]] std::size_t constraint_index() const { return constraint_index_; }
  [[nodiscard]] const std::vector<double>& point() const { return x_; }

 private:
  std::size_t constraint_index_;
  std::vector<double> x_;
};

struct Violations {
  std::vector<double> raw;          // g_j(x), length m, for caching
  std::vector<double> components;   // tolerance-adjusted, length m
  double bound = 0.0;               // aggregate bound violation, zero tolerance
};

/// Sum over i of max(0, x_i - u_i) + max(0, l_i - x_i).
double bound_violation(const Problem& problem, std::span<const double> x);

/// Tolerance-adjusted violation amounts from cached raw constraint values.
std::vector<double> adjust_violations(const Problem& problem, std::span<const double> raw_g,
                                      const ToleranceState& tol);

/// Evaluates the constraint set once (one CE) and adjusts it by `tol`.
/// Throws EvaluationError on a non-finite constraint value.
Violations violation_vector(const Problem& problem, std::span<const double> x,
                            const ToleranceState& tol);

bool is_feasible(const Problem& problem, std::span<const double> raw_g, std::span<const double> x,
                 const ToleranceState& tol);

struct PenaltyResult {
  double value;
  bool saturated;
};

/// f + k * sum_j v_j^alpha_j with alpha_j = 2 if v_j >= 1 else 1. The bound
/// term, when passed, is one more entry of `violations`.
PenaltyResult penalized_conflict_proposed(double f_value, std::span<const double> violations,
                                          const PenaltyConfig& cfg);

/// f + sum_j k_j * v_j^alpha_j; violations are expected at zero tolerance.
PenaltyResult penalized_conflict_static(double f_value, std::span<const double> violations,
                                        const PenaltyConfig& cfg);

PenaltyResult penalized_conflict(double f_value, std::span<const double> violations,
                                 const PenaltyConfig& cfg);

struct EvalCounters {
  long long fe = 0;
  long long ce = 0;
  long long saturations = 0;
};

/// One evaluated point: raw conflict, cached raw constraints and the
/// penalized conflict under the tolerances in effect.
struct PointEvaluation {
  double conflict = 0.0;
  std::vector<double> raw_constraints;
  double bound = 0.0;
  double penalized = 0.0;
  bool feasible = false;
};

/// Binds a problem to a penalty configuration. Counters belong to the caller.
class PenalizedEvaluator {
 public:
  PenalizedEvaluator(const Problem& problem, PenaltyConfig cfg);

  /// One FE plus one CE.
  PointEvaluation evaluate(std::span<const double> x, const ToleranceState& tol,
                           EvalCounters& counters) const;

  /// Recomputes penalized conflict and feasibility from cached values without
  /// calling the problem functions.
  void repenalize(PointEvaluation& point, const ToleranceState& tol, EvalCounters* counters) const;

  [[nodiscard]] const Problem& problem() const { return *problem_; }
  [[nodiscard]] const PenaltyConfig& config() const { return cfg_; }

 private:
  const Problem* problem_;
  PenaltyConfig cfg_;
};

}  // namespace papso
