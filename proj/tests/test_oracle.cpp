#include <landing/geometry.hpp>
#include <landing/oracle.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace landing;
using namespace landing::testing;
using namespace landing::oracle;

namespace {

Matrix scalar(double v) {
  Matrix m(1, 1);
  m << v;
  return m;
}

} // namespace

TEST(FdDirectional, LinearFunctionIsExact) {
  const Matrix c = random_matrix(4, 3, 1);
  const auto linear = [&c](const Matrix &x) { return frobenius_inner(c, x); };
  const Matrix x = random_matrix(4, 3, 2);
  const Matrix xi = random_matrix(4, 3, 3);
  EXPECT_NEAR(fd_directional(linear, x, xi, 1e-3), frobenius_inner(c, xi), 1e-12);
  EXPECT_THROW(fd_directional(linear, x, xi, 0.0), std::invalid_argument);
}

// the normal term X h is half the Frobenius gradient of N
TEST(FdDirectional, InfeasibilityIsTwiceTheNormalTermPairing) {
  const Matrix x = random_matrix(6, 2, 4);
  const Matrix xi = random_matrix(6, 2, 5);
  EXPECT_LE(relative_error(fd_directional(infeasibility, x, xi, default_fd_step(x)),
                           2 * frobenius_inner(grad_infeasibility(x), xi)),
            1e-6);
}

TEST(FdDirectional, SecondOrderAccuracy) {
  // cubic so the central difference error is t^2 * (third derivative term)
  const auto cubic = [](const Matrix &x) { return x.array().cube().sum(); };
  const Matrix x = random_matrix(3, 2, 6);
  const Matrix xi = random_matrix(3, 2, 7);
  const double exact = (3 * x.array().square() * xi.array()).sum();
  const double e1 = std::abs(fd_directional(cubic, x, xi, 1e-2) - exact);
  const double e2 = std::abs(fd_directional(cubic, x, xi, 5e-3) - exact);
  EXPECT_NEAR(e1 / e2, 4.0, 0.05);
}

TEST(RelativeError, Definitions) {
  EXPECT_DOUBLE_EQ(relative_error(1e-3, 2e-3), 1e-3);
  EXPECT_DOUBLE_EQ(relative_error(100.0, 101.0), 1.0 / 101.0);
  EXPECT_EQ(relative_error(Matrix::Zero(2, 2), Matrix::Zero(2, 2)), 0);
}

TEST(GradientViaGram, Examples) {
  const Matrix st = random_stiefel_point(5, 2, 8);
  const Matrix g = random_matrix(5, 2, 9);
  EXPECT_LE(relative_error(gradient_via_gram(AmbientPoint(st), MetricParam(1), g), g), 1e-13);
  EXPECT_NEAR(gradient_via_gram(AmbientPoint(scalar(2)), MetricParam(0.5), scalar(1))(0, 0),
              8.0, 1e-13);

  const AmbientPoint x = random_point(5, 2, 10);
  const Matrix eg = random_matrix(5, 2, 11);
  EXPECT_LE(relative_error(gradient_via_gram(x, MetricParam(0.3), eg),
                           grad_unconstrained(x, MetricParam(0.3), eg)),
            1e-8);
}

TEST(GradientViaGram, RejectsIllConditionedGram) {
  Matrix x(3, 2);
  x << 1, 0, 0, 1e-6, 0, 0;
  EXPECT_THROW(gradient_via_gram(AmbientPoint(x), MetricParam(1), Matrix::Ones(3, 2)),
               IllConditionedError);
}

TEST(ProjectionViaLsq, Examples) {
  const AmbientPoint x = random_point(6, 3, 12);
  const Matrix tangent = random_skew(6, 13) * x.matrix();
  const Matrix normal = x.matrix() * x.gram().inverse() * sym(random_matrix(3, 3, 14));
  const Matrix z = random_matrix(6, 3, 15);
  const Matrix closed = project_tangent(x, z);
  for (double beta : {0.1, 0.5, 1.0, 5.0}) {
    const MetricParam mp(beta);
    EXPECT_LE(relative_error(projection_via_lsq(x, mp, tangent), tangent), 1e-10);
    EXPECT_LE(projection_via_lsq(x, mp, normal).norm(), 1e-10 * normal.norm());
    EXPECT_LE(relative_error(projection_via_lsq(x, mp, z), closed), 1e-8);
  }
  // zero-dimensional tangent space
  EXPECT_EQ(projection_via_lsq(AmbientPoint(scalar(3)), MetricParam(1), scalar(1))(0, 0), 0);
}

TEST(EigenReference, Examples) {
  const Matrix d = Vector::LinSpaced(10, 1, 10).asDiagonal();
  const EigenReference ref = eigen_reference(d, 3);
  EXPECT_DOUBLE_EQ(ref.value, 6.0);
  EXPECT_LE(ref.basis.bottomRows(7).norm(), 1e-14);

  const EigenReference id = eigen_reference(Matrix::Identity(5, 5), 2);
  EXPECT_DOUBLE_EQ(id.value, 2.0);
  EXPECT_LE((id.basis.transpose() * id.basis - Matrix::Identity(2, 2)).norm(), 1e-14);

  Rng rng(16);
  const Matrix a = random_symmetric(12, rng);
  const EigenReference r = eigen_reference(a, 4);
  EXPECT_LE((a * r.basis - r.basis * (r.basis.transpose() * a * r.basis)).norm(), 1e-10);
  EXPECT_THROW(eigen_reference(a, 13), DimensionError);
}
