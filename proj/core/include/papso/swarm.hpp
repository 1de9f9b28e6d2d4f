#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "papso/constraints.hpp"
#include "papso/random.hpp"

namespace papso {

enum class Formulation { Classical, RRR1, RRR2 };

std::string to_string(Formulation f);

/// Dynamics coefficients of one sub-neighbourhood.
///
/// Classical uses iw/sw and records aw = iw + sw. The RRR formulations draw
/// the attraction strength uniformly in [phi_min, phi_max], centred on aw,
/// and split it between individuality and sociality via ip + sp = 1.
struct CoefficientSet {
  Formulation formulation = Formulation::Classical;
  double w = 0.0;
  double aw = 0.0;
  double iw = 0.0;
  double sw = 0.0;
  double ip = 0.5;
  double sp = 0.5;
  double phi_min = 0.0;
  double phi_max = 0.0;
};

/// aw in (1, 2): w = aw - 1, phi in [(w+1)/2, 3(w+1)/2].
CoefficientSet rrr1_coefficients(double aw, double ip = 0.5);
/// aw in (1, 2.61]: w = 1/aw - 2 + aw, phi_max = 2(w+1), phi_min = 2aw - phi_max.
CoefficientSet rrr2_coefficients(double aw, double ip = 0.5);
CoefficientSet classical_coefficients(double w, double iw, double sw);

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> pbest_position;
  double pbest_conflict = 0.0;
  std::vector<double> pbest_raw_constraints;
  double pbest_bound = 0.0;
  double pbest_penalized = 0.0;
  bool pbest_feasible = false;
};

std::vector<double> velocity_update(const Particle& particle, std::span<const double> lbest_position,
                                    const CoefficientSet& coeffs, Rng& rng);

std::vector<double> position_update(std::span<const double> x, std::span<const double> v);

struct Topology {
  std::vector<std::vector<std::size_t>> neighbourhoods;  // informers, self included
  std::vector<std::size_t> subgroup_of;                  // index into the coefficient sets
  std::size_t n_subgroups = 0;

  [[nodiscard]] std::size_t size() const { return neighbourhoods.size(); }
  /// True if information can reach every particle from every particle.
  [[nodiscard]] bool connected() const;
};

/// Directed ring: particle i is informed by i, i+1, ..., i+links (mod N).
/// Sub-neighbourhoods are contiguous blocks of ceil(N / n_subgroups).
Topology build_forward_topology(std::size_t n_particles, std::size_t n_subgroups,
                                std::size_t links_per_particle = 2);

using PointEvaluator = std::function<PointEvaluation(std::span<const double>)>;

struct Swarm {
  std::vector<Particle> particles;
  std::vector<std::size_t> lbest;  // per particle, index of the best informer

  [[nodiscard]] std::size_t size() const { return particles.size(); }
  [[nodiscard]] std::span<const double> lbest_position(std::size_t i) const {
    return particles[lbest[i]].pbest_position;
  }
  [[nodiscard]] double percent_feasible_pbests() const;
};

class SwarmEvaluationError : public std::runtime_error {
 public:
  SwarmEvaluationError(std::size_t particle, const std::string& what)
      : std::runtime_error("particle " + std::to_string(particle) + ": " + what),
        particle_(particle) {}
  [[nodiscard]] std::size_t particle() const { return particle_; }

 private:
  std::size_t particle_;
};

/// Builds particles at `positions` with zero velocity and pbest set to the
/// evaluated initial positions, then selects the initial lbests.
Swarm initialize_swarm(std::span<const std::vector<double>> positions, const Topology& topology,
                       const PointEvaluator& evaluate);

/// Stores an evaluation as a particle's best experience.
void set_pbest(Particle& particle, std::span<const double> position, PointEvaluation eval);

/// lbest of each particle: minimal pbest_penalized in its neighbourhood,
/// ties to the lowest particle index.
void select_lbests(Swarm& swarm, const Topology& topology);

// Phases of a synchronous step, exposed separately so callers can reorder
// the evaluation phase.

/// Velocity and position update of every particle from the previous pbests
/// and lbests. Randoms are drawn in particle order.
void move_particles(Swarm& swarm, const Topology& topology, std::span<const CoefficientSet> coeffs,
                    Rng& rng);

PointEvaluation evaluate_particle(const Swarm& swarm, std::size_t i, const PointEvaluator& evaluate);

/// Replaces pbests that are strictly improved, then reselects lbests.
void commit_best_experiences(Swarm& swarm, const Topology& topology,
                             std::vector<PointEvaluation> evaluations);

/// Recomputes every pbest's penalized conflict and feasibility from its
/// cached constraint values after a tolerance change, then reselects lbests.
/// No problem functions are called.
void repenalize_pbests(Swarm& swarm, const Topology& topology, const PenalizedEvaluator& evaluator,
                       const ToleranceState& tol);

/// move_particles, evaluate every particle in index order, commit.
void step_swarm(Swarm& swarm, const Topology& topology, std::span<const CoefficientSet> coeffs,
                const PointEvaluator& evaluate, Rng& rng);

}  // namespace papso
