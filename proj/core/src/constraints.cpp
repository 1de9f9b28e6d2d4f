#include "papso/constraints.hpp"

#include <cmath>
#include <sstream>

namespace papso {

void Problem::validate() const {
  if (lower.size() != upper.size() || lower.empty()) {
    throw std::domain_error("problem '" + name + "': bounds must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      std::ostringstream os;
      os << "problem '" << name << "': degenerate bounds on variable " << i << " [" << lower[i]
         << ", " << upper[i] << "]";
      throw std::domain_error(os.str());
    }
  }
  if (!objective) throw std::domain_error("problem '" + name + "': objective not set");
  if (n_constraints() > 0 && !constraints) {
    throw std::domain_error("problem '" + name + "': constraint set not set");
  }
  if (!reference_point.empty() && reference_point.size() != lower.size()) {
    throw std::domain_error("problem '" + name + "': reference point has wrong dimension");
  }
}

ToleranceState ToleranceState::final_state(double final_tol_eq) {
  ToleranceState s;
  s.tol_ineq = 0.0;
  s.tol_eq = final_tol_eq;
  s.final_tol_eq = final_tol_eq;
  return s;
}

void PenaltyConfig::validate(std::size_t n_terms) const {
  if (scheme == PenaltyScheme::ProposedConstant) {
    if (!(k > 0.0)) throw std::domain_error("penalty coefficient k must be positive");
    return;
  }
  if (static_k.size() != n_terms || static_alpha.size() != n_terms) {
    std::ostringstream os;
    os << "static penalty needs " << n_terms << " coefficients and exponents, got "
       << static_k.size() << " and " << static_alpha.size();
    throw std::domain_error(os.str());
  }
  for (double kj : static_k) {
    if (!(kj > 0.0)) throw std::domain_error("static penalty coefficients must be positive");
  }
}

double bound_violation(const Problem& problem, std::span<const double> x) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += std::max(0.0, x[i] - problem.upper[i]) + std::max(0.0, -x[i] + problem.lower[i]);
  }
  return total;
}

std::vector<double> adjust_violations(const Problem& problem, std::span<const double> raw_g,
                                      const ToleranceState& tol) {
  std::vector<double> out(raw_g.size());
  for (std::size_t j = 0; j < raw_g.size(); ++j) {
    out[j] = j < problem.n_inequality ? std::max(0.0, raw_g[j] - tol.tol_ineq)
                                      : std::max(0.0, std::abs(raw_g[j]) - tol.tol_eq);
  }
  return out;
}

namespace {

std::vector<double> evaluate_raw(const Problem& problem, std::span<const double> x) {
  std::vector<double> raw(problem.n_constraints());
  if (!raw.empty()) problem.constraints(x, raw);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!std::isfinite(raw[j])) {
      std::ostringstream os;
      os << "problem '" << problem.name << "': constraint " << j << " is not finite at x = (";
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
      os << ")";
      throw EvaluationError(os.str(), j, {x.begin(), x.end()});
    }
  }
  return raw;
}

bool all_zero(std::span<const double> v) {
  for (double c : v) {
    if (c != 0.0) return false;
  }
  return true;
}

PenaltyResult saturate(double value) {
  if (!std::isfinite(value) || value > kConflictSentinel) return {kConflictSentinel, true};
  return {value, false};
}

}  // namespace

Violations violation_vector(const Problem& problem, std::span<const double> x,
                            const ToleranceState& tol) {
  Violations v;
  v.raw = evaluate_raw(problem, x);
  v.components = adjust_violations(problem, v.raw, tol);
  v.bound = bound_violation(problem, x);
  return v;
}

bool is_feasible(const Problem& problem, std::span<const double> raw_g, std::span<const double> x,
                 const ToleranceState& tol) {
  if (bound_violation(problem, x) != 0.0) return false;
  for (std::size_t j = 0; j < raw_g.size(); ++j) {
    const bool ok = j < problem.n_inequality ? raw_g[j] <= tol.tol_ineq
                                             : std::abs(raw_g[j]) <= tol.tol_eq;
    if (!ok) return false;
  }
  return true;
}

PenaltyResult penalized_conflict_proposed(double f_value, std::span<const double> violations,
                                          const PenaltyConfig& cfg) {
  double sum = 0.0;
  for (double v : violations) {
    if (v == 0.0) continue;
    sum += v >= cfg.alpha_threshold ? v * v : v;
  }
  if (sum == 0.0) return saturate(f_value);
  return saturate(f_value + cfg.k * sum);
}

PenaltyResult penalized_conflict_static(double f_value, std::span<const double> violations,
                                        const PenaltyConfig& cfg) {
  double sum = 0.0;
  for (std::size_t j = 0; j < violations.size(); ++j) {
    if (violations[j] == 0.0) continue;
    sum += cfg.static_k[j] * std::pow(violations[j], cfg.static_alpha[j]);
  }
  if (sum == 0.0) return saturate(f_value);
  return saturate(f_value + sum);
}

PenaltyResult penalized_conflict(double f_value, std::span<const double> violations,
                                 const PenaltyConfig& cfg) {
  return cfg.scheme == PenaltyScheme::ProposedConstant
             ? penalized_conflict_proposed(f_value, violations, cfg)
             : penalized_conflict_static(f_value, violations, cfg);
}

PenalizedEvaluator::PenalizedEvaluator(const Problem& problem, PenaltyConfig cfg)
    : problem_(&problem), cfg_(std::move(cfg)) {
  problem.validate();
  cfg_.validate(problem.n_constraints() + 1);
}

PointEvaluation PenalizedEvaluator::evaluate(std::span<const double> x, const ToleranceState& tol,
                                             EvalCounters& counters) const {
  PointEvaluation p;
  p.conflict = problem_->objective(x);
  ++counters.fe;
  p.raw_constraints = evaluate_raw(*problem_, x);
  ++counters.ce;
  p.bound = bound_violation(*problem_, x);
  repenalize(p, tol, &counters);
  return p;
}

void PenalizedEvaluator::repenalize(PointEvaluation& point, const ToleranceState& tol,
                                    EvalCounters* counters) const {
  const std::vector<double> adjusted = adjust_violations(*problem_, point.raw_constraints, tol);
  point.feasible = point.bound == 0.0 && all_zero(adjusted);

  std::vector<double> terms;
  if (cfg_.scheme == PenaltyScheme::StaticAdditive) {
    ToleranceState zero;
    zero.tol_ineq = 0.0;
    zero.tol_eq = 0.0;
    terms = adjust_violations(*problem_, point.raw_constraints, zero);
  } else {
    terms = adjusted;
  }
  terms.push_back(point.bound);
  const PenaltyResult r = penalized_conflict(point.conflict, terms, cfg_);
  point.penalized = r.value;
  if (r.saturated && counters != nullptr) ++counters->saturations;
}

}  // namespace papso
