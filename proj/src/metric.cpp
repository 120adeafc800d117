#include <landing/metric.hpp>

#include <cmath>
#include <sstream>

namespace landing {

MetricParam::MetricParam(Scalar beta) : beta_(beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "MetricParam: beta must be positive and finite, got " << beta;
    throw std::invalid_argument(msg.str());
  }
}

Scalar metric_eval(const AmbientPoint &x, const MetricParam &beta,
                   const Matrix &xi, const Matrix &zeta) {
  check_shape("metric_eval", xi.rows(), xi.cols(), x.rows(), x.cols());
  check_shape("metric_eval", zeta.rows(), zeta.cols(), x.rows(), x.cols());
  const Matrix &X = x.matrix();
  // zeta M^{-1} - (1-beta) X M^{-1} X^T zeta M^{-1}
  const Matrix right = x.solve_gram_right(zeta);
  const Matrix weighted =
      right - (1 - beta.beta()) * X * x.solve_gram(X.transpose() * right);
  return frobenius_inner(xi, weighted);
}

Scalar metric_eval_stiefel(const Matrix &x, const MetricParam &beta,
                           const Matrix &xi, const Matrix &zeta) {
  check_shape("metric_eval_stiefel", xi.rows(), xi.cols(), x.rows(), x.cols());
  check_shape("metric_eval_stiefel", zeta.rows(), zeta.cols(), x.rows(), x.cols());
  const Scalar violation = constraint_h(x).matrix().norm();
  if (violation > 1e-10) {
    std::ostringstream msg;
    msg << "metric_eval_stiefel: X is not on St(n,p), ||X^T X - I|| = " << violation;
    throw std::invalid_argument(msg.str());
  }
  return frobenius_inner(xi, zeta - (1 - beta.beta()) * x * (x.transpose() * zeta));
}

TangentDecomposition decompose(const AmbientPoint &x,
                               const OrthoComplement &complement,
                               const Matrix &eta) {
  check_shape("decompose", eta.rows(), eta.cols(), x.rows(), x.cols());
  check_shape("decompose", complement.basis.rows(), complement.basis.cols(),
              x.rows(), x.rows() - x.cols());
  return TangentDecomposition{x.solve_gram(x.matrix().transpose() * eta),
                              complement.basis.transpose() * eta, x, complement};
}

Scalar metric_eval_decomposed(const TangentDecomposition &eta,
                              const TangentDecomposition &xi,
                              const MetricParam &beta) {
  if (eta.base.matrix() != xi.base.matrix() ||
      eta.complement.basis != xi.complement.basis)
    throw std::invalid_argument(
        "metric_eval_decomposed: decompositions have different base points");
  const AmbientPoint &x = eta.base;
  const Matrix &perp = eta.complement.basis;
  const Scalar rotational =
      (eta.a.transpose() * x.gram() * x.solve_gram_right(xi.a)).trace();
  const Scalar normal =
      (eta.b.transpose() * (perp.transpose() * perp) * x.solve_gram_right(xi.b))
          .trace();
  return beta.beta() * rotational + normal;
}

Matrix gram_matrix(const AmbientPoint &x, const MetricParam &beta) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  const Matrix &X = x.matrix();
  const Matrix gram_inv = sym(x.gram().inverse());
  const Matrix left = Matrix::Identity(n, n) -
                      (1 - beta.beta()) * X * gram_inv * X.transpose();

  // vec(L Z R) = (R^T kron L) vec(Z)
  Matrix g(n * p, n * p);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index i = 0; i < p; ++i)
      g.block(i * n, j * n, n, n) = gram_inv(j, i) * left;
  return sym(g);
}

} // namespace landing
