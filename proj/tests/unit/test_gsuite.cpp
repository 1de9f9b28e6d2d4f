#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "papso/constraints.hpp"
#include "papso/gsuite.hpp"
#include "papso/random.hpp"

namespace papso {
namespace {

TEST(Suite, NamesAndLookup) {
  const auto& names = benchmark_names();
  ASSERT_EQ(names.size(), 13u);
  EXPECT_EQ(names.front(), "g01");
  EXPECT_EQ(names.back(), "g13");
  EXPECT_THROW(get_problem("g14"), std::out_of_range);
  for (const auto& n : names) EXPECT_EQ(get_problem(n).problem.name, n);
}

TEST(Suite, TabulatedFeatures) {
  const auto g01 = get_problem("g01");
  EXPECT_EQ(g01.problem.dimension(), 13u);
  EXPECT_EQ(g01.problem.n_inequality, 9u);
  EXPECT_EQ(g01.problem.n_equality, 0u);
  EXPECT_DOUBLE_EQ(g01.metadata.optimum, -15.0);

  const auto g13 = get_problem("g13");
  EXPECT_EQ(g13.problem.dimension(), 5u);
  EXPECT_EQ(g13.problem.n_inequality, 0u);
  EXPECT_EQ(g13.problem.n_equality, 3u);
  EXPECT_DOUBLE_EQ(g13.metadata.optimum, 0.053942);

  const auto g05 = get_problem("g05");
  EXPECT_EQ(g05.problem.n_inequality, 1u);
  EXPECT_EQ(g05.problem.n_equality, 3u);
  EXPECT_DOUBLE_EQ(g05.metadata.optimum, 5126.496714);

  EXPECT_EQ(get_problem("g04").problem.n_inequality, 3u);
  EXPECT_EQ(get_problem("g12").problem.n_inequality, 1u);
}

TEST(Suite, MetadataMatchesProblems) {
  for (const auto& b : all_problems()) {
    EXPECT_EQ(b.metadata.name, b.problem.name);
    EXPECT_EQ(b.metadata.dimension, b.problem.dimension());
    EXPECT_EQ(b.metadata.n_inequality, b.problem.n_inequality);
    EXPECT_EQ(b.metadata.n_equality, b.problem.n_equality);
    EXPECT_NEAR(b.problem.known_optimum, b.metadata.optimum, 5e-7 * std::max(1.0, std::abs(b.metadata.optimum)));
    EXPECT_NO_THROW(b.problem.validate());
  }
}

TEST(Suite, ReferencePointsFeasibleAndOptimal) {
  const ToleranceState final_tol = ToleranceState::final_state();
  for (const auto& b : all_problems()) {
    const Problem& p = b.problem;
    ASSERT_EQ(p.reference_point.size(), p.dimension()) << p.name;
    std::vector<double> g(p.n_constraints());
    p.constraints(p.reference_point, g);
    EXPECT_TRUE(is_feasible(p, g, p.reference_point, final_tol)) << p.name;
    const double f = p.objective(p.reference_point);
    EXPECT_NEAR(f, p.known_optimum, 1e-6 * std::abs(p.known_optimum)) << p.name;
    // The tabulated optimum is rounded to 6 decimals.
    EXPECT_NEAR(f, b.metadata.optimum, 5e-7 + 1e-6 * std::abs(b.metadata.optimum)) << p.name;
  }
}

TEST(Suite, G12ClosedFormMatchesBruteForce) {
  const Problem p = get_problem("g12").problem;
  Rng rng(12);
  std::vector<double> g(1);
  for (int k = 0; k < 20000; ++k) {
    // Includes points outside the box, where the nearest centre saturates.
    std::vector<double> x(3);
    for (double& v : x) v = -2.0 + 14.0 * uniform01(rng);
    p.constraints(x, g);
    double brute = std::numeric_limits<double>::infinity();
    for (int a = 1; a <= 9; ++a) {
      for (int b = 1; b <= 9; ++b) {
        for (int c = 1; c <= 9; ++c) {
          const double d = (x[0] - a) * (x[0] - a) + (x[1] - b) * (x[1] - b) + (x[2] - c) * (x[2] - c);
          brute = std::min(brute, d - 0.0625);
        }
      }
    }
    EXPECT_NEAR(g[0], brute, 1e-12 * std::max(1.0, std::abs(brute)));
  }
}

TEST(Suite, G12OptimumAtCentre) {
  const Problem p = get_problem("g12").problem;
  const std::vector<double> x = {5.0, 5.0, 5.0};
  EXPECT_DOUBLE_EQ(p.objective(x), -1.0);
  std::vector<double> g(1);
  p.constraints(x, g);
  EXPECT_DOUBLE_EQ(g[0], -0.0625);
}

TEST(Suite, G05IntervalFoldsBothSides) {
  const Problem p = get_problem("g05").problem;
  std::vector<double> g(p.n_constraints());
  std::vector<double> x = {600.0, 600.0, 0.0, 0.0};
  p.constraints(x, g);
  EXPECT_NEAR(g[0], -0.55, 1e-15);
  x[3] = 0.7;
  p.constraints(x, g);
  EXPECT_NEAR(g[0], 0.15, 1e-12);
  x[3] = -0.7;
  p.constraints(x, g);
  EXPECT_NEAR(g[0], 0.15, 1e-12);
}

TEST(Suite, G04IntervalsFold) {
  const Problem p = get_problem("g04").problem;
  std::vector<double> g(3);
  p.constraints(p.reference_point, g);
  for (double v : g) EXPECT_LE(v, 1e-9);
  // One side of each interval is binding, so the folded value cannot be
  // far below zero at the optimum for the first constraint.
  EXPECT_NEAR(g[0], 0.0, 1e-6);
}

}  // namespace
}  // namespace papso
