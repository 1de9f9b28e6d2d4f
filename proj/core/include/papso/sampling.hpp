#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "papso/constraints.hpp"
#include "papso/random.hpp"

namespace papso {

/// Uniform point in the problem's bounding box.
std::vector<double> sample_in_bounds(const Problem& problem, Rng& rng);

struct FeasibilityEstimate {
  double percent = 0.0;
  std::size_t feasible = 0;
  std::size_t samples = 0;
};

/// Percentage of uniform in-bounds samples that satisfy every constraint
/// under `tol`. Makes `n_samples` constraint evaluations.
FeasibilityEstimate estimate_feasibility_ratio(const Problem& problem, const ToleranceState& tol,
                                               std::size_t n_samples, Rng& rng);

/// Row-major design: one point per row, `dimension` coordinates each.
using Design = std::vector<std::vector<double>>;

/// Plain Latin hypercube in the unit cube: every axis is split into
/// n_points strata with exactly one point per stratum.
Design latin_hypercube_unit(std::size_t n_points, std::size_t dimension, Rng& rng);

/// Smallest pairwise Euclidean distance of a design (infinity for < 2 points).
double min_pairwise_distance(const Design& design);

struct MaximinResult {
  Design positions;        // in problem units
  Design unit_positions;   // in the normalized box
  std::size_t winner = 0;  // index of the chosen candidate
  double min_distance = 0.0;  // of the winner, in normalized units
};

/// Best of `n_candidates` Latin hypercube designs under the maximin distance
/// criterion, measured in the box-normalized space.
MaximinResult latin_hypercube_init(std::size_t n_particles,
                                   std::span<const std::pair<double, double>> bounds,
                                   std::size_t n_candidates, Rng& rng);

std::vector<std::pair<double, double>> problem_bounds(const Problem& problem);

}  // namespace papso
