#include <landing/geometry.hpp>

namespace landing {

bool is_normal(const AmbientPoint &x, const Matrix &eta, Scalar tol) {
  check_shape("is_normal", eta.rows(), eta.cols(), x.rows(), x.cols());
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  Matrix basis(n * p, p * (p + 1) / 2);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = i; j < p; ++j) {
      Matrix s = Matrix::Zero(p, p);
      s(i, j) += 1;
      s(j, i) += 1;
      basis.col(col++) = vec(x.matrix() * x.solve_gram(s));
    }
  }
  const Vector target = vec(eta);
  const Vector coeffs = basis.colPivHouseholderQr().solve(target);
  return (basis * coeffs - target).norm() <= tol * eta.norm();
}

Matrix project_tangent(const AmbientPoint &x, const Matrix &z) {
  check_shape("project_tangent", z.rows(), z.cols(), x.rows(), x.cols());
  const Matrix &X = x.matrix();
  const Matrix xtz = X.transpose() * z;
  // X M^{-1} skew(X^T Z) - X M^{-1} X^T Z, one solve
  return z + X * x.solve_gram(skew(xtz) - xtz);
}

Matrix grad_unconstrained(const AmbientPoint &x, const MetricParam &beta,
                          const Matrix &eucl_grad) {
  check_shape("grad_unconstrained", eucl_grad.rows(), eucl_grad.cols(), x.rows(),
              x.cols());
  const Scalar b = beta.beta();
  const Matrix &X = x.matrix();
  const Matrix gm = eucl_grad * x.gram();
  return gm + ((1 - b) / b) * X * x.solve_gram(X.transpose() * gm);
}

Matrix grad_constrained(const AmbientPoint &x, const MetricParam &beta,
                        const Matrix &eucl_grad) {
  check_shape("grad_constrained", eucl_grad.rows(), eucl_grad.cols(), x.rows(),
              x.cols());
  const Scalar half_inv = 0.5 / beta.beta();
  const Matrix &X = x.matrix();
  const Matrix gm = eucl_grad * x.gram();
  return gm - half_inv * X * (eucl_grad.transpose() * X) +
         (half_inv - 1) * X * x.solve_gram(X.transpose() * gm);
}

Matrix grad_canonical(const AmbientPoint &x, const Matrix &eucl_grad) {
  check_shape("grad_canonical", eucl_grad.rows(), eucl_grad.cols(), x.rows(),
              x.cols());
  const Matrix &X = x.matrix();
  return eucl_grad * x.gram() - X * (eucl_grad.transpose() * X);
}

Matrix first_order_feasibility_drift(const Matrix &x, const Matrix &xi) {
  check_shape("first_order_feasibility_drift", xi.rows(), xi.cols(), x.rows(),
              x.cols());
  const Matrix xtxi = x.transpose() * xi;
  return xtxi + xtxi.transpose();
}

GradientPair gradients(const AmbientPoint &x, const MetricParam &beta,
                       const Matrix &eucl_grad) {
  return GradientPair{eucl_grad, grad_unconstrained(x, beta, eucl_grad),
                      grad_constrained(x, beta, eucl_grad), x, beta};
}

} // namespace landing
