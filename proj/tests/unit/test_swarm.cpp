#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "papso/swarm.hpp"

namespace papso {
namespace {

TEST(Coefficients, Rrr1AtAw180) {
  const CoefficientSet c = rrr1_coefficients(1.80);
  EXPECT_EQ(c.formulation, Formulation::RRR1);
  EXPECT_NEAR(c.w, 0.80, 1e-12);
  EXPECT_NEAR(c.phi_max, 2.70, 1e-12);
  EXPECT_NEAR(c.phi_min, 0.90, 1e-12);
  EXPECT_DOUBLE_EQ(c.sp, 0.5);
}

TEST(Coefficients, Rrr2AtAw240) {
  const CoefficientSet c = rrr2_coefficients(2.40);
  EXPECT_EQ(c.formulation, Formulation::RRR2);
  EXPECT_NEAR(c.w, 0.816667, 5e-7);
  EXPECT_NEAR(c.phi_max, 3.633333, 5e-7);
  EXPECT_NEAR(c.phi_min, 1.166667, 5e-7);
}

TEST(Coefficients, Rrr1NearUpperLimit) {
  const CoefficientSet c = rrr1_coefficients(2.0 - 1e-9);
  EXPECT_NEAR(c.w, 1.0, 1e-8);
  EXPECT_NEAR(c.phi_max, 3.0, 1e-8);
  EXPECT_NEAR(c.phi_min, 1.0, 1e-8);
}

TEST(Coefficients, RangeChecks) {
  EXPECT_THROW(rrr1_coefficients(1.0), std::domain_error);
  EXPECT_THROW(rrr1_coefficients(2.0), std::domain_error);
  EXPECT_THROW(rrr2_coefficients(1.0), std::domain_error);
  EXPECT_THROW(rrr2_coefficients(2.62), std::domain_error);
  EXPECT_NO_THROW(rrr2_coefficients(2.61));
  EXPECT_THROW(rrr1_coefficients(1.5, 1.0), std::domain_error);
  EXPECT_THROW(classical_coefficients(0.7, -1.0, 1.0), std::domain_error);
}

TEST(Coefficients, IntervalCentredOnAw) {
  for (double aw = 1.01; aw < 2.0; aw += 0.01) {
    const CoefficientSet c = rrr1_coefficients(aw);
    EXPECT_NEAR((c.phi_min + c.phi_max) / 2.0, aw, 1e-12 * aw);
    EXPECT_DOUBLE_EQ(c.phi_max / c.phi_min, 3.0);
  }
  for (double aw = 1.01; aw <= 2.61; aw += 0.01) {
    const CoefficientSet c = rrr2_coefficients(aw);
    EXPECT_NEAR(c.phi_min + c.phi_max, 2.0 * aw, 1e-12 * aw);
  }
}

TEST(Coefficients, ClassicalRecordsAw) {
  const CoefficientSet c = classical_coefficients(0.7298, 1.4961, 1.4961);
  EXPECT_EQ(c.formulation, Formulation::Classical);
  EXPECT_DOUBLE_EQ(c.aw, c.iw + c.sw);
  EXPECT_NEAR(c.aw, 2.9922, 1e-12);
}

Particle particle_at(std::vector<double> x, std::vector<double> v) {
  Particle p;
  p.position = x;
  p.velocity = std::move(v);
  p.pbest_position = std::move(x);
  return p;
}

TEST(VelocityUpdate, AttractionsVanishAtBest) {
  const Particle p = particle_at({1.0, -2.0, 3.0}, {0.5, 1.5, -2.0});
  for (const auto& c : {rrr1_coefficients(1.8), rrr2_coefficients(2.4),
                        classical_coefficients(0.7298, 1.4961, 1.4961)}) {
    Rng rng(5);
    const auto v = velocity_update(p, p.position, c, rng);
    for (std::size_t j = 0; j < v.size(); ++j) EXPECT_DOUBLE_EQ(v[j], c.w * p.velocity[j]);
  }
}

TEST(VelocityUpdate, PureSocialityStaysInPhiBounds) {
  CoefficientSet c = rrr2_coefficients(2.4, 0.0);
  c.w = 0.0;
  Particle p = particle_at({0.0, 1.0}, {0.0, 0.0});
  const std::vector<double> lbest = {2.0, -3.0};
  p.pbest_position = lbest;
  Rng rng(8);
  for (int k = 0; k < 10000; ++k) {
    const auto v = velocity_update(p, lbest, c, rng);
    for (std::size_t j = 0; j < 2; ++j) {
      const double d = lbest[j] - p.position[j];
      const double lo = std::min(c.phi_min * d, c.phi_max * d);
      const double hi = std::max(c.phi_min * d, c.phi_max * d);
      EXPECT_GE(v[j], lo - 1e-12);
      EXPECT_LE(v[j], hi + 1e-12);
    }
  }
}

TEST(VelocityUpdate, PhiSamplesWithinScaledBounds) {
  // With a unit distance to pbest only, v equals phi_i; to lbest only, phi_s.
  const double ip = 0.3;
  CoefficientSet c = rrr1_coefficients(1.6, ip);
  c.w = 0.0;
  Particle p = particle_at({0.0}, {0.0});
  p.pbest_position = {1.0};
  const std::vector<double> here = {0.0};
  const std::vector<double> unit = {1.0};
  Rng rng(21);
  for (int k = 0; k < 100000; ++k) {
    const double phi_i = velocity_update(p, here, c, rng)[0];
    EXPECT_GE(phi_i, ip * c.phi_min);
    EXPECT_LE(phi_i, ip * c.phi_max);
  }
  p.pbest_position = {0.0};
  for (int k = 0; k < 100000; ++k) {
    const double phi_s = velocity_update(p, unit, c, rng)[0];
    EXPECT_GE(phi_s, (1.0 - ip) * c.phi_min);
    EXPECT_LE(phi_s, (1.0 - ip) * c.phi_max);
  }
}

TEST(VelocityUpdate, SeededDeterminism) {
  const Particle p = particle_at({0.3, 0.1}, {1.0, -1.0});
  const std::vector<double> lbest = {0.9, 0.2};
  const CoefficientSet c = classical_coefficients(0.7298, 1.4961, 1.4961);
  Rng a(99);
  Rng b(99);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(velocity_update(p, lbest, c, a), velocity_update(p, lbest, c, b));
}

TEST(PositionUpdate, Arithmetic) {
  EXPECT_EQ(position_update(std::vector<double>{1, 2}, std::vector<double>{0, 0}),
            (std::vector<double>{1, 2}));
  EXPECT_EQ(position_update(std::vector<double>{1, 2}, std::vector<double>{-1, 3}),
            (std::vector<double>{0, 5}));
  EXPECT_EQ(position_update(std::vector<double>{1}, std::vector<double>{1e9}),
            (std::vector<double>{1e9 + 1}));
}

TEST(Topology, SixParticlesThreeGroups) {
  const Topology t = build_forward_topology(6, 3, 2);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t.neighbourhoods[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(t.neighbourhoods[5], (std::vector<std::size_t>{5, 0, 1}));
  EXPECT_EQ(t.subgroup_of, (std::vector<std::size_t>{0, 0, 1, 1, 2, 2}));
  EXPECT_EQ(t.n_subgroups, 3u);
}

TEST(Topology, SingleParticle) {
  const Topology t = build_forward_topology(1, 1, 2);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.neighbourhoods[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(t.subgroup_of, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(t.connected());
}

TEST(Topology, InvariantsOverSizes) {
  for (std::size_t n = 1; n <= 60; ++n) {
    for (std::size_t links = 1; links <= 5; ++links) {
      const std::size_t groups = std::min<std::size_t>(3, n);
      const Topology t = build_forward_topology(n, groups, links);
      EXPECT_TRUE(t.connected()) << n << " " << links;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& nb = t.neighbourhoods[i];
        EXPECT_NE(std::find(nb.begin(), nb.end(), i), nb.end());
        EXPECT_LT(t.subgroup_of[i], groups);
      }
      EXPECT_TRUE(std::is_sorted(t.subgroup_of.begin(), t.subgroup_of.end()));
    }
  }
}

TEST(Topology, Errors) {
  EXPECT_THROW(build_forward_topology(0, 1, 2), std::domain_error);
  EXPECT_THROW(build_forward_topology(2, 3, 2), std::domain_error);
}

// Evaluator for a bound-free sphere function that counts its calls.
struct Sphere {
  long long calls = 0;
  PointEvaluation operator()(std::span<const double> x) {
    ++calls;
    PointEvaluation e;
    e.conflict = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    e.penalized = e.conflict;
    e.feasible = true;
    return e;
  }
};

TEST(Step, StationarySingleParticle) {
  Sphere sphere;
  const PointEvaluator eval = std::ref(sphere);
  const Topology t = build_forward_topology(1, 1, 2);
  const std::vector<std::vector<double>> x0 = {{0.4, -0.2}};
  Swarm s = initialize_swarm(x0, t, eval);
  CoefficientSet c = classical_coefficients(0.0, 1.0, 1.0);
  const std::vector<CoefficientSet> coeffs = {c};
  Rng rng(1);
  for (int k = 0; k < 10; ++k) step_swarm(s, t, coeffs, eval, rng);
  EXPECT_EQ(s.particles[0].position, x0[0]);
  EXPECT_EQ(s.particles[0].pbest_position, x0[0]);
  EXPECT_EQ(sphere.calls, 11);
}

TEST(Step, EqualConflictKeepsOldPbest) {
  Particle p = particle_at({1.0}, {0.0});
  p.pbest_penalized = 1.0;
  p.pbest_conflict = 1.0;
  Swarm s;
  s.particles = {p};
  s.lbest = {0};
  const Topology t = build_forward_topology(1, 1, 1);
  s.particles[0].position = {-1.0};
  PointEvaluation e;
  e.conflict = 1.0;
  e.penalized = 1.0;
  commit_best_experiences(s, t, {e});
  EXPECT_EQ(s.particles[0].pbest_position, (std::vector<double>{1.0}));
  e.penalized = std::nextafter(1.0, 0.0);
  commit_best_experiences(s, t, {e});
  EXPECT_EQ(s.particles[0].pbest_position, (std::vector<double>{-1.0}));
}

TEST(Step, LbestTiesGoToLowestIndex) {
  Sphere sphere;
  const PointEvaluator eval = std::ref(sphere);
  const Topology t = build_forward_topology(4, 1, 3);
  const std::vector<std::vector<double>> x0 = {{2.0}, {1.0}, {-1.0}, {3.0}};
  const Swarm s = initialize_swarm(x0, t, eval);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(s.lbest[i], 1u);
}

TEST(Step, FeCountIsParticlesTimesSteps) {
  Sphere sphere;
  const PointEvaluator eval = std::ref(sphere);
  const std::size_t n = 50;
  const Topology t = build_forward_topology(n, 3, 2);
  Rng init(3);
  std::vector<std::vector<double>> x0(n, std::vector<double>(4));
  for (auto& x : x0) {
    for (double& v : x) v = 2.0 * uniform01(init) - 1.0;
  }
  Swarm s = initialize_swarm(x0, t, eval);
  const auto coeffs = std::vector<CoefficientSet>{rrr2_coefficients(2.4), rrr1_coefficients(1.8),
                                                  classical_coefficients(0.7298, 1.4961, 1.4961)};
  Rng rng(4);
  for (int k = 1; k < 200; ++k) step_swarm(s, t, coeffs, eval, rng);
  EXPECT_EQ(sphere.calls, static_cast<long long>(n) * 200);
}

TEST(Step, BitIdenticalTrajectories) {
  const std::size_t n = 12;
  const Topology t = build_forward_topology(n, 3, 2);
  const auto coeffs = std::vector<CoefficientSet>{rrr2_coefficients(2.4), rrr1_coefficients(1.8),
                                                  classical_coefficients(0.7298, 1.4961, 1.4961)};
  auto run = [&] {
    Sphere sphere;
    const PointEvaluator eval = std::ref(sphere);
    Rng init(10);
    std::vector<std::vector<double>> x0(n, std::vector<double>(3));
    for (auto& x : x0) {
      for (double& v : x) v = uniform01(init);
    }
    Swarm s = initialize_swarm(x0, t, eval);
    Rng rng(11);
    for (int k = 0; k < 300; ++k) step_swarm(s, t, coeffs, eval, rng);
    return s;
  };
  const Swarm a = run();
  const Swarm b = run();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(a.particles[i].position, b.particles[i].position);
    EXPECT_EQ(a.particles[i].velocity, b.particles[i].velocity);
    EXPECT_EQ(a.particles[i].pbest_position, b.particles[i].pbest_position);
  }
  EXPECT_EQ(a.lbest, b.lbest);
}

TEST(Step, EvaluationOrderDoesNotMatter) {
  const std::size_t n = 15;
  const Topology t = build_forward_topology(n, 3, 2);
  const auto coeffs = std::vector<CoefficientSet>{rrr2_coefficients(2.4), rrr1_coefficients(1.8),
                                                  classical_coefficients(0.7298, 1.4961, 1.4961)};
  Sphere sphere;
  const PointEvaluator eval = std::ref(sphere);
  Rng init(12);
  std::vector<std::vector<double>> x0(n, std::vector<double>(2));
  for (auto& x : x0) {
    for (double& v : x) v = 4.0 * uniform01(init) - 2.0;
  }
  Swarm fwd = initialize_swarm(x0, t, eval);
  Swarm rev = fwd;
  Rng ra(13);
  Rng rb(13);
  for (int k = 0; k < 100; ++k) {
    step_swarm(fwd, t, coeffs, eval, ra);

    move_particles(rev, t, coeffs, rb);
    std::vector<PointEvaluation> evals(n);
    for (std::size_t i = n; i-- > 0;) evals[i] = evaluate_particle(rev, i, eval);
    commit_best_experiences(rev, t, std::move(evals));
  }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(fwd.particles[i].pbest_position, rev.particles[i].pbest_position);
    EXPECT_EQ(fwd.particles[i].pbest_penalized, rev.particles[i].pbest_penalized);
  }
  EXPECT_EQ(fwd.lbest, rev.lbest);
}

TEST(Step, EvaluatorErrorsCarryParticleIndex) {
  const Topology t = build_forward_topology(3, 1, 1);
  int calls = 0;
  const PointEvaluator eval = [&](std::span<const double>) -> PointEvaluation {
    if (++calls == 2) throw std::runtime_error("boom");
    return {};
  };
  const std::vector<std::vector<double>> x0 = {{0.0}, {1.0}, {2.0}};
  try {
    initialize_swarm(x0, t, eval);
    FAIL() << "expected SwarmEvaluationError";
  } catch (const SwarmEvaluationError& e) {
    EXPECT_EQ(e.particle(), 1u);
  }
}

}  // namespace
}  // namespace papso
