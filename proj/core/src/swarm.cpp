#include "papso/swarm.hpp"

#include <algorithm>
#include <sstream>

namespace papso {

std::string to_string(Formulation f) {
  switch (f) {
    case Formulation::Classical: return "classical";
    case Formulation::RRR1: return "rrr1";
    case Formulation::RRR2: return "rrr2";
  }
  return "unknown";
}

namespace {

void check_ip(double ip) {
  if (!(ip >= 0.0 && ip < 1.0)) {
    std::ostringstream os;
    os << "individuality proportion ip = " << ip << " outside [0, 1)";
    throw std::domain_error(os.str());
  }
}

}  // namespace

CoefficientSet rrr1_coefficients(double aw, double ip) {
  if (!(aw > 1.0 && aw < 2.0)) {
    std::ostringstream os;
    os << "RRR1 acceleration weight aw = " << aw << " outside (1.00, 2.00)";
    throw std::domain_error(os.str());
  }
  check_ip(ip);
  CoefficientSet c;
  c.formulation = Formulation::RRR1;
  c.aw = aw;
  c.w = aw - 1.0;
  c.phi_max = 1.5 * (c.w + 1.0);
  c.phi_min = 0.5 * (c.w + 1.0);
  c.ip = ip;
  c.sp = 1.0 - ip;
  return c;
}

CoefficientSet rrr2_coefficients(double aw, double ip) {
  if (!(aw > 1.0 && aw <= 2.61)) {
    std::ostringstream os;
    os << "RRR2 acceleration weight aw = " << aw << " outside (1.00, 2.61]";
    throw std::domain_error(os.str());
  }
  check_ip(ip);
  CoefficientSet c;
  c.formulation = Formulation::RRR2;
  c.aw = aw;
  c.w = 1.0 / aw - 2.0 + aw;
  c.phi_max = 2.0 * (c.w + 1.0);
  c.phi_min = 2.0 * aw - c.phi_max;
  c.ip = ip;
  c.sp = 1.0 - ip;
  return c;
}

CoefficientSet classical_coefficients(double w, double iw, double sw) {
  if (!(iw >= 0.0) || !(sw >= 0.0)) {
    std::ostringstream os;
    os << "classical weights must be non-negative (iw = " << iw << ", sw = " << sw << ")";
    throw std::domain_error(os.str());
  }
  CoefficientSet c;
  c.formulation = Formulation::Classical;
  c.w = w;
  c.iw = iw;
  c.sw = sw;
  c.aw = iw + sw;
  return c;
}

std::vector<double> velocity_update(const Particle& particle, std::span<const double> lbest_position,
                                    const CoefficientSet& coeffs, Rng& rng) {
  const std::size_t n = particle.position.size();
  std::vector<double> v(n);
  const double span = coeffs.phi_max - coeffs.phi_min;
  for (std::size_t j = 0; j < n; ++j) {
    double phi_i;
    double phi_s;
    if (coeffs.formulation == Formulation::Classical) {
      phi_i = coeffs.iw * uniform01(rng);
      phi_s = coeffs.sw * uniform01(rng);
    } else {
      phi_i = coeffs.ip * (coeffs.phi_min + span * uniform01(rng));
      phi_s = coeffs.sp * (coeffs.phi_min + span * uniform01(rng));
    }
    const double x = particle.position[j];
    v[j] = coeffs.w * particle.velocity[j] + phi_i * (particle.pbest_position[j] - x) +
           phi_s * (lbest_position[j] - x);
  }
  return v;
}

std::vector<double> position_update(std::span<const double> x, std::span<const double> v) {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] + v[j];
  return out;
}

bool Topology::connected() const {
  const std::size_t n = size();
  if (n == 0) return false;
  // Information flows from an informer to the particles it informs. Check
  // that every particle reaches all others along informer edges.
  std::vector<std::vector<std::size_t>> informs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k : neighbourhoods[i]) informs[k].push_back(i);
  }
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : informs[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

Topology build_forward_topology(std::size_t n_particles, std::size_t n_subgroups,
                                std::size_t links_per_particle) {
  if (n_particles == 0) throw std::domain_error("forward topology needs at least one particle");
  if (n_subgroups == 0 || n_subgroups > n_particles) {
    std::ostringstream os;
    os << "number of sub-neighbourhoods (" << n_subgroups << ") must be in [1, " << n_particles
       << "]";
    throw std::domain_error(os.str());
  }
  if (links_per_particle == 0) throw std::domain_error("links per particle must be positive");

  Topology t;
  t.neighbourhoods.resize(n_particles);
  t.subgroup_of.resize(n_particles);
  const std::size_t links = std::min(links_per_particle, n_particles - 1);
  const std::size_t block = (n_particles + n_subgroups - 1) / n_subgroups;
  for (std::size_t i = 0; i < n_particles; ++i) {
    auto& nb = t.neighbourhoods[i];
    for (std::size_t k = 0; k <= links; ++k) nb.push_back((i + k) % n_particles);
    t.subgroup_of[i] = std::min(i / block, n_subgroups - 1);
  }
  t.n_subgroups = n_subgroups;
  return t;
}

double Swarm::percent_feasible_pbests() const {
  if (particles.empty()) return 0.0;
  std::size_t count = 0;
  for (const auto& p : particles) count += p.pbest_feasible ? 1 : 0;
  return 100.0 * static_cast<double>(count) / static_cast<double>(particles.size());
}

void set_pbest(Particle& particle, std::span<const double> position, PointEvaluation eval) {
  particle.pbest_position.assign(position.begin(), position.end());
  particle.pbest_conflict = eval.conflict;
  particle.pbest_raw_constraints = std::move(eval.raw_constraints);
  particle.pbest_bound = eval.bound;
  particle.pbest_penalized = eval.penalized;
  particle.pbest_feasible = eval.feasible;
}

void select_lbests(Swarm& swarm, const Topology& topology) {
  const std::size_t n = swarm.size();
  swarm.lbest.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    for (std::size_t k : topology.neighbourhoods[i]) {
      if (best == n) {
        best = k;
        continue;
      }
      const double a = swarm.particles[k].pbest_penalized;
      const double b = swarm.particles[best].pbest_penalized;
      if (a < b || (a == b && k < best)) best = k;
    }
    swarm.lbest[i] = best;
  }
}

PointEvaluation evaluate_particle(const Swarm& swarm, std::size_t i, const PointEvaluator& evaluate) {
  try {
    return evaluate(swarm.particles[i].position);
  } catch (const SwarmEvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw SwarmEvaluationError(i, e.what());
  }
}

Swarm initialize_swarm(std::span<const std::vector<double>> positions, const Topology& topology,
                       const PointEvaluator& evaluate) {
  if (positions.size() != topology.size()) {
    throw std::invalid_argument("initial positions and topology disagree on swarm size");
  }
  Swarm swarm;
  swarm.particles.resize(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Particle& p = swarm.particles[i];
    p.position = positions[i];
    p.velocity.assign(p.position.size(), 0.0);
    set_pbest(p, p.position, evaluate_particle(swarm, i, evaluate));
  }
  select_lbests(swarm, topology);
  return swarm;
}

void move_particles(Swarm& swarm, const Topology& topology, std::span<const CoefficientSet> coeffs,
                    Rng& rng) {
  if (coeffs.size() < topology.n_subgroups) {
    throw std::invalid_argument("fewer coefficient sets than sub-neighbourhoods");
  }
  // Velocities for all particles first, so every update reads the same
  // previous-step pbests.
  for (std::size_t i = 0; i < swarm.size(); ++i) {
    Particle& p = swarm.particles[i];
    p.velocity = velocity_update(p, swarm.lbest_position(i), coeffs[topology.subgroup_of[i]], rng);
  }
  for (Particle& p : swarm.particles) p.position = position_update(p.position, p.velocity);
}

void commit_best_experiences(Swarm& swarm, const Topology& topology,
                             std::vector<PointEvaluation> evaluations) {
  if (evaluations.size() != swarm.size()) {
    throw std::invalid_argument("one evaluation per particle expected");
  }
  for (std::size_t i = 0; i < swarm.size(); ++i) {
    Particle& p = swarm.particles[i];
    if (evaluations[i].penalized < p.pbest_penalized) {
      set_pbest(p, p.position, std::move(evaluations[i]));
    }
  }
  select_lbests(swarm, topology);
}

void repenalize_pbests(Swarm& swarm, const Topology& topology, const PenalizedEvaluator& evaluator,
                       const ToleranceState& tol) {
  for (Particle& p : swarm.particles) {
    PointEvaluation cached;
    cached.conflict = p.pbest_conflict;
    cached.raw_constraints = std::move(p.pbest_raw_constraints);
    cached.bound = p.pbest_bound;
    evaluator.repenalize(cached, tol, nullptr);
    p.pbest_raw_constraints = std::move(cached.raw_constraints);
    p.pbest_penalized = cached.penalized;
    p.pbest_feasible = cached.feasible;
  }
  select_lbests(swarm, topology);
}

void step_swarm(Swarm& swarm, const Topology& topology, std::span<const CoefficientSet> coeffs,
                const PointEvaluator& evaluate, Rng& rng) {
  move_particles(swarm, topology, coeffs, rng);
  std::vector<PointEvaluation> evals;
  evals.reserve(swarm.size());
  for (std::size_t i = 0; i < swarm.size(); ++i) evals.push_back(evaluate_particle(swarm, i, evaluate));
  commit_best_experiences(swarm, topology, std::move(evals));
}

}  // namespace papso
