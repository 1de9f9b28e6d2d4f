#include "papso/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace papso {

std::vector<double> sample_in_bounds(const Problem& problem, Rng& rng) {
  std::vector<double> x(problem.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = problem.lower[i] + (problem.upper[i] - problem.lower[i]) * uniform01(rng);
  }
  return x;
}

FeasibilityEstimate estimate_feasibility_ratio(const Problem& problem, const ToleranceState& tol,
                                               std::size_t n_samples, Rng& rng) {
  if (n_samples == 0) throw std::domain_error("feasibility ratio needs at least one sample");
  FeasibilityEstimate est;
  est.samples = n_samples;
  std::vector<double> x(problem.dimension());
  std::vector<double> raw(problem.n_constraints());
  for (std::size_t s = 0; s < n_samples; ++s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = problem.lower[i] + (problem.upper[i] - problem.lower[i]) * uniform01(rng);
    }
    if (!raw.empty()) problem.constraints(x, raw);
    if (is_feasible(problem, raw, x, tol)) ++est.feasible;
  }
  est.percent = 100.0 * static_cast<double>(est.feasible) / static_cast<double>(n_samples);
  return est;
}

Design latin_hypercube_unit(std::size_t n_points, std::size_t dimension, Rng& rng) {
  Design d(n_points, std::vector<double>(dimension));
  std::vector<std::size_t> perm(n_points);
  const double stratum = 1.0 / static_cast<double>(n_points);
  for (std::size_t j = 0; j < dimension; ++j) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    // Fisher-Yates with our own draws; std::shuffle's algorithm is
    // implementation-defined.
    for (std::size_t i = n_points; i > 1; --i) {
      const auto k = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
      std::swap(perm[i - 1], perm[std::min(k, i - 1)]);
    }
    for (std::size_t i = 0; i < n_points; ++i) {
      const double u = (static_cast<double>(perm[i]) + uniform01(rng)) * stratum;
      d[i][j] = std::min(u, std::nextafter(static_cast<double>(perm[i] + 1) * stratum, 0.0));
    }
  }
  return d;
}

double min_pairwise_distance(const Design& design) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < design.size(); ++a) {
    for (std::size_t b = a + 1; b < design.size(); ++b) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < design[a].size(); ++j) {
        const double diff = design[a][j] - design[b][j];
        d2 += diff * diff;
      }
      best = std::min(best, d2);
    }
  }
  return std::sqrt(best);
}

MaximinResult latin_hypercube_init(std::size_t n_particles,
                                   std::span<const std::pair<double, double>> bounds,
                                   std::size_t n_candidates, Rng& rng) {
  if (n_particles == 0) throw std::domain_error("Latin hypercube needs at least one point");
  if (n_candidates == 0) throw std::domain_error("Latin hypercube needs at least one candidate");
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (!(bounds[j].first < bounds[j].second)) {
      std::ostringstream os;
      os << "degenerate bounds on axis " << j << ": [" << bounds[j].first << ", "
         << bounds[j].second << "]";
      throw std::domain_error(os.str());
    }
  }

  MaximinResult result;
  result.min_distance = -1.0;
  for (std::size_t c = 0; c < n_candidates; ++c) {
    Design candidate = latin_hypercube_unit(n_particles, bounds.size(), rng);
    const double dist = min_pairwise_distance(candidate);
    if (dist > result.min_distance) {
      result.min_distance = dist;
      result.winner = c;
      result.unit_positions = std::move(candidate);
    }
  }

  result.positions = result.unit_positions;
  for (auto& row : result.positions) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = bounds[j].first + (bounds[j].second - bounds[j].first) * row[j];
    }
  }
  return result;
}

std::vector<std::pair<double, double>> problem_bounds(const Problem& problem) {
  std::vector<std::pair<double, double>> b(problem.dimension());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = {problem.lower[i], problem.upper[i]};
  return b;
}

}  // namespace papso
