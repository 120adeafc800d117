#include <landing/landing.hpp>
#include <landing/oracle.hpp>
#include <landing/problems.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace landing;
using namespace landing::testing;
using oracle::relative_error;

namespace {

void expect_fd_consistent(const Objective &f, std::uint64_t seed) {
  const Matrix x = random_matrix(f.n, f.p, seed);
  const Matrix xi = random_matrix(f.n, f.p, seed + 1);
  const double fd = oracle::fd_directional(f.eval, x, xi, oracle::default_fd_step(x));
  EXPECT_LE(relative_error(fd, frobenius_inner(f.eucl_grad(x), xi)), 1e-6)
      << f.name << " seed " << seed;
}

} // namespace

TEST(Rayleigh, DiagonalOptimum) {
  const Matrix a = Vector::LinSpaced(10, 1, 10).asDiagonal();
  const Objective f = rayleigh(a, 3);
  EXPECT_DOUBLE_EQ(f.eval(Matrix::Identity(10, 3)), 6.0);
  EXPECT_DOUBLE_EQ(oracle::eigen_reference(a, 3).value, 6.0);
}

TEST(Rayleigh, EigenvectorsAreStationaryForTheEuclideanMetric) {
  Rng rng(4);
  const Matrix a = random_symmetric(8, rng);
  const auto ref = oracle::eigen_reference(a, 3);
  const Objective f = rayleigh(a, 3);
  const Matrix grad =
      grad_constrained(AmbientPoint(ref.basis), MetricParam(1), f.eucl_grad(ref.basis));
  EXPECT_LE(grad.norm(), 1e-12 * a.norm());
}

TEST(Rayleigh, RejectsNonSymmetricAndBadShapes) {
  Matrix a = Matrix::Identity(3, 3);
  a(0, 1) = 1;
  EXPECT_THROW(rayleigh(a, 2), std::invalid_argument);
  EXPECT_THROW(rayleigh(Matrix::Identity(3, 3), 4), DimensionError);
  EXPECT_THROW(rayleigh(Matrix::Ones(3, 2), 1), DimensionError);
  EXPECT_THROW(rayleigh(Matrix::Identity(3, 3), 2).eval(Matrix::Ones(3, 1)), DimensionError);
}

TEST(Rayleigh, RandomInstanceOptimumMatchesDenseEigensolver) {
  const ProblemInstance inst = random_instance(ProblemKind::rayleigh, 20, 5, 123);
  // recover A column by column from grad = 2 A X
  Matrix full(20, 20);
  for (Eigen::Index j = 0; j < 20; ++j) {
    Matrix e = Matrix::Zero(20, 5);
    e(j, 0) = 1;
    full.col(j) = 0.5 * inst.objective.eucl_grad(e).col(0);
  }
  EXPECT_NEAR(oracle::eigen_reference(full, 5).value, *inst.optimum, 1e-10);
}

TEST(Procrustes, ZeroAtTarget) {
  const Matrix a = random_matrix(7, 5, 1);
  const Matrix target = random_stiefel_point(5, 2, 2);
  const Objective f = procrustes(a, a * target);
  EXPECT_LE(f.eval(target), 1e-28);
  EXPECT_EQ(f.n, 5);
  EXPECT_EQ(f.p, 2);
  EXPECT_THROW(procrustes(a, Matrix::Ones(6, 2)), DimensionError);
  EXPECT_THROW(procrustes(Matrix::Ones(4, 2), Matrix::Ones(4, 3)), DimensionError);
}

TEST(Procrustes, PolarFactorOptimumForIdentityA) {
  const Eigen::Index n = 5;
  const Matrix b = random_matrix(n, n, 3);
  const Objective f = procrustes(Matrix::Identity(n, n), b);
  Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix polar = svd.matrixU() * svd.matrixV().transpose();
  // 1/2 ||Q - B||^2 = 1/2 (n + ||B||^2) - sum(sigma)
  const double expected = 0.5 * (static_cast<double>(n) + b.squaredNorm()) - svd.singularValues().sum();
  EXPECT_NEAR(f.eval(polar), expected, 1e-12 * expected);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_GE(f.eval(random_stiefel_point(n, n, 10 + seed)), expected);
}

// For p < n the Stiefel manifold is connected and the thin polar factor of B
// is the only local minimizer, so landing must find it from any start.
TEST(Procrustes, LandingFindsThinPolarFactor) {
  const Eigen::Index n = 6, p = 3;
  const Matrix b = random_matrix(n, p, 3);
  const Objective f = procrustes(Matrix::Identity(n, n), b);
  Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double expected =
      0.5 * (static_cast<double>(p) + b.squaredNorm()) - svd.singularValues().sum();

  LandingConfig config;
  config.beta = MetricParam(0.5);
  config.step = StepPolicy::fixed(0.05);
  const LandingResult r = solve(f, random_matrix(n, p, 4), config);
  ASSERT_EQ(r.status, LandingStatus::converged);
  EXPECT_NEAR(r.trace.back().f_value, expected, 1e-7);
  EXPECT_LE(relative_error(r.final_point.matrix(), svd.matrixU() * svd.matrixV().transpose()),
            1e-6);
}

TEST(Procrustes, RandomInstanceReachesZero) {
  const ProblemInstance inst = random_instance(ProblemKind::procrustes, 20, 5, 1, 0.5);
  const LandingResult r = solve(inst.objective, inst.x0, LandingConfig{});
  ASSERT_EQ(r.status, LandingStatus::converged);
  EXPECT_LE(r.trace.back().f_value, 1e-12);
}

TEST(Objectives, FiniteDifferenceGradients) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    expect_fd_consistent(random_instance(ProblemKind::rayleigh, 9, 3, seed).objective,
                         1000 + seed);
    expect_fd_consistent(random_instance(ProblemKind::procrustes, 9, 3, seed).objective,
                         2000 + seed);
  }
}

TEST(RandomInstance, Deterministic) {
  for (auto kind : {ProblemKind::rayleigh, ProblemKind::procrustes}) {
    const ProblemInstance a = random_instance(kind, 8, 3, 77, 0.2);
    const ProblemInstance b = random_instance(kind, 8, 3, 77, 0.2);
    EXPECT_EQ(a.x0, b.x0);
    const Matrix probe = random_matrix(8, 3, 5);
    EXPECT_EQ(a.objective.eucl_grad(probe), b.objective.eucl_grad(probe));
    EXPECT_EQ(a.optimum, b.optimum);
    EXPECT_NE(random_instance(kind, 8, 3, 78, 0.2).x0, a.x0);
  }
}

TEST(RandomInstance, FeasibleWhenDeltaIsZero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemInstance inst = random_instance(ProblemKind::rayleigh, 10, 4, seed, 0.0);
    EXPECT_LE(constraint_h(inst.x0).matrix().norm(), 1e-12);
  }
}

TEST(RandomInstance, DeltaControlsInfeasibility) {
  double lo = 1e300, hi = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ProblemInstance inst = random_instance(ProblemKind::rayleigh, 20, 5, seed, 0.5);
    const double h = constraint_h(inst.x0).matrix().norm();
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  EXPECT_GE(lo, 0.25);
  EXPECT_LE(hi, 1.0);
  // spread for the record: ||h(X0)|| in [0.4375, 0.5625] by construction
  EXPECT_GE(lo, 0.4375 - 1e-12);
  EXPECT_LE(hi, 0.5625 + 1e-12);
}

TEST(RandomInstance, GaussianStartIsWellConditioned) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemInstance inst = random_instance(ProblemKind::procrustes, 6, 6, seed);
    EXPECT_GE(sigma_ratio(inst.x0), 1e-6);
  }
  EXPECT_THROW(random_instance(ProblemKind::rayleigh, 3, 5, 1), DimensionError);
  EXPECT_THROW(random_instance(ProblemKind::rayleigh, 5, 3, 1, -0.1), std::invalid_argument);
}

TEST(ProblemKind, Parsing) {
  EXPECT_EQ(parse_problem_kind("rayleigh"), ProblemKind::rayleigh);
  EXPECT_EQ(to_string(parse_problem_kind("procrustes")), "procrustes");
  EXPECT_THROW(parse_problem_kind("sphere"), std::invalid_argument);
}

// Nonconvexity allows rare saddle stalls; at least 18 of 20 runs must hit the
// eigenvalue oracle and every run must end feasible.
TEST(Rayleigh, LandingFromTwentyStarts) {
  for (double beta : {0.5, 1.0}) {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const ProblemInstance inst = random_instance(ProblemKind::rayleigh, 20, 5, 500 + seed, 0.5);
      LandingConfig config;
      config.beta = MetricParam(beta);
      const LandingResult r = solve(inst.objective, inst.x0, config);
      EXPECT_LE(r.trace.back().h_norm, 1e-8);
      if (std::abs(r.trace.back().f_value - *inst.optimum) <= 1e-6)
        ++hits;
    }
    EXPECT_GE(hits, 18) << "beta " << beta;
  }
}
