#include <landing/oracle.hpp>

#include <cmath>
#include <sstream>

namespace landing::oracle {

Scalar relative_error(Scalar a, Scalar b) {
  return std::abs(a - b) / std::max({Scalar(1), std::abs(a), std::abs(b)});
}

Scalar relative_error(const Matrix &a, const Matrix &b) {
  check_shape("relative_error", b.rows(), b.cols(), a.rows(), a.cols());
  const Scalar scale = std::max(a.norm(), b.norm());
  return scale > 0 ? (a - b).norm() / scale : 0;
}

Scalar default_fd_step(const Matrix &x) { return 1e-6 * (1 + x.norm()); }

Scalar fd_directional(const std::function<Scalar(const Matrix &)> &fun,
                      const Matrix &x, const Matrix &xi, Scalar step) {
  if (!(step > 0))
    throw std::invalid_argument("fd_directional: step must be positive");
  check_shape("fd_directional", xi.rows(), xi.cols(), x.rows(), x.cols());
  return (fun(x + step * xi) - fun(x - step * xi)) / (2 * step);
}

Scalar spd_condition(const Matrix &g) {
  const Vector ev = Eigen::SelfAdjointEigenSolver<Matrix>(g, Eigen::EigenvaluesOnly)
                        .eigenvalues();
  if (ev.size() == 0)
    return 1;
  if (!(ev(0) > 0))
    return std::numeric_limits<Scalar>::infinity();
  return ev(ev.size() - 1) / ev(0);
}

namespace {

void require_conditioned(const char *where, const Matrix &g) {
  const Scalar cond = spd_condition(g);
  if (cond > kMaxCondition) {
    std::ostringstream msg;
    msg << where << ": Gram matrix condition number " << cond << " exceeds "
        << kMaxCondition;
    throw IllConditionedError(msg.str());
  }
}

} // namespace

Matrix gradient_via_gram(const AmbientPoint &x, const MetricParam &beta,
                         const Matrix &eucl_grad) {
  check_shape("gradient_via_gram", eucl_grad.rows(), eucl_grad.cols(), x.rows(),
              x.cols());
  const Matrix g = gram_matrix(x, beta);
  require_conditioned("gradient_via_gram", g);
  const Vector v = g.ldlt().solve(vec(eucl_grad));
  return unvec(v, x.rows(), x.cols());
}

Matrix projection_via_lsq(const AmbientPoint &x, const MetricParam &beta,
                          const Matrix &z) {
  check_shape("projection_via_lsq", z.rows(), z.cols(), x.rows(), x.cols());
  const Matrix basis = tangent_basis(x).stacked();
  if (basis.cols() == 0)
    return Matrix::Zero(x.rows(), x.cols());
  const Matrix g = gram_matrix(x, beta);
  const Matrix reduced = sym(basis.transpose() * g * basis);
  require_conditioned("projection_via_lsq", reduced);
  const Vector coeffs = reduced.ldlt().solve(basis.transpose() * (g * vec(z)));
  return unvec(basis * coeffs, x.rows(), x.cols());
}

EigenReference eigen_reference(const Matrix &a, Eigen::Index p) {
  if (a.rows() != a.cols() || p < 1 || p > a.rows())
    throw DimensionError("eigen_reference: need square A and 1 <= p <= n");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(a);
  return EigenReference{eig.eigenvalues().head(p).sum(),
                        eig.eigenvectors().leftCols(p)};
}

} // namespace landing::oracle
