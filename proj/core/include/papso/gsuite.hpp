#pragma once

#include <optional>
#include <string>
#include <vector>

#include "papso/constraints.hpp"

namespace papso {

/// Reference features of one test problem. Interval constraints count once
/// (g04 has 3, g05 has 1) and g12's sphere-membership test is one constraint.
struct BenchmarkMetadata {
  std::string name;
  double optimum = 0.0;  // as tabulated, 6 decimals
  std::size_t dimension = 0;
  std::size_t n_inequality = 0;
  std::size_t n_equality = 0;
  // Feasibility ratios in percent; "< 0.0001" entries are stored as nullopt.
  std::optional<double> fr_no_tolerance;
  std::optional<double> fr_desired_tolerance;
  double fr_initial_tolerance = 0.0;
  std::optional<double> mean_initial_tol_ineq;
  std::optional<double> mean_initial_tol_eq;
};

struct BenchmarkProblem {
  Problem problem;
  BenchmarkMetadata metadata;
};

/// "g01" ... "g13".
const std::vector<std::string>& benchmark_names();

/// Throws std::out_of_range listing the valid names for unknown input.
BenchmarkProblem get_problem(const std::string& name);

std::vector<BenchmarkProblem> all_problems();

}  // namespace papso
