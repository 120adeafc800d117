#include <landing/constraint.hpp>

#include <sstream>

namespace landing {

void check_shape(const char *where, Eigen::Index rows, Eigen::Index cols,
                 Eigen::Index expected_rows, Eigen::Index expected_cols) {
  if (rows == expected_rows && cols == expected_cols)
    return;
  std::ostringstream msg;
  msg << where << ": expected a " << expected_rows << "x" << expected_cols
      << " matrix, got " << rows << "x" << cols;
  throw DimensionError(msg.str());
}

namespace {

void check_tall(const char *where, const Matrix &x) {
  if (x.cols() > x.rows()) {
    std::ostringstream msg;
    msg << where << ": p must satisfy p <= n (got n=" << x.rows()
        << ", p=" << x.cols() << ")";
    throw DimensionError(msg.str());
  }
}

} // namespace

Scalar sigma_ratio(const Matrix &x) {
  if (x.size() == 0)
    return 0;
  const Vector s = Eigen::JacobiSVD<Matrix>(x).singularValues();
  const Scalar smax = s(0);
  return smax > 0 ? s(s.size() - 1) / smax : 0;
}

AmbientPoint::AmbientPoint(Matrix x, Scalar rank_floor) : x_(std::move(x)) {
  if (x_.size() == 0)
    throw DimensionError("AmbientPoint: empty matrix");
  check_tall("AmbientPoint", x_);
  if (!x_.allFinite())
    throw SingularLayerError("AmbientPoint: non-finite entries");

  const Vector s = Eigen::JacobiSVD<Matrix>(x_).singularValues();
  sigma_max_ = s(0);
  sigma_min_ = s(s.size() - 1);
  if (!(sigma_max_ > 0) || !(sigma_min_ >= rank_floor * sigma_max_)) {
    std::ostringstream msg;
    msg << "AmbientPoint: singular layer, sigma_min/sigma_max = "
        << (sigma_max_ > 0 ? sigma_min_ / sigma_max_ : 0.0)
        << " below rank floor " << rank_floor;
    throw SingularLayerError(msg.str());
  }

  gram_ = x_.transpose() * x_;
  gram_ = sym(gram_);
  gram_llt_.compute(gram_);
  if (gram_llt_.info() != Eigen::Success)
    throw SingularLayerError("AmbientPoint: X^T X is not numerically positive definite");
}

SymMatrix::SymMatrix(const Matrix &a) {
  check_shape("SymMatrix", a.rows(), a.cols(), a.rows(), a.rows());
  m_ = sym(a);
}

SkewMatrix::SkewMatrix(const Matrix &a) {
  check_shape("SkewMatrix", a.rows(), a.cols(), a.rows(), a.rows());
  m_ = skew(a);
}

Matrix TangentBasis::stacked() const {
  if (vectors.empty())
    return Matrix();
  Matrix out(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = vec(vectors[k]);
  return out;
}

SymMatrix constraint_h(const Matrix &x) {
  check_tall("constraint_h", x);
  return SymMatrix(x.transpose() * x - Matrix::Identity(x.cols(), x.cols()));
}

Scalar infeasibility(const Matrix &x) {
  return 0.5 * constraint_h(x).matrix().squaredNorm();
}

Matrix grad_infeasibility(const Matrix &x) {
  return x * constraint_h(x).matrix();
}

Matrix phi_map(const AmbientPoint &x, const Matrix &y) {
  check_shape("phi_map", y.rows(), y.cols(), x.rows(), x.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(x.gram());
  const Matrix root = eig.eigenvectors() *
                      eig.eigenvalues().cwiseSqrt().asDiagonal() *
                      eig.eigenvectors().transpose();
  return y * sym(root);
}

OrthoComplement ortho_complement(const AmbientPoint &x) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  Eigen::HouseholderQR<Matrix> qr(x.matrix());
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return OrthoComplement{q.rightCols(n - p)};
}

TangentBasis tangent_basis(const AmbientPoint &x) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  TangentBasis basis;
  basis.vectors.reserve(static_cast<std::size_t>(tangent_dimension(n, p)));

  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = i + 1; j < p; ++j) {
      Matrix omega = Matrix::Zero(p, p);
      omega(i, j) = 1;
      omega(j, i) = -1;
      basis.vectors.push_back(x.matrix() * x.solve_gram(omega));
    }
  }

  const Matrix complement = ortho_complement(x).basis;
  for (Eigen::Index l = 0; l < p; ++l) {
    for (Eigen::Index k = 0; k < n - p; ++k) {
      Matrix delta = Matrix::Zero(n, p);
      delta.col(l) = complement.col(k);
      basis.vectors.push_back(std::move(delta));
    }
  }
  return basis;
}

bool is_tangent(const Matrix &x, const Matrix &xi, Scalar tol) {
  check_shape("is_tangent", xi.rows(), xi.cols(), x.rows(), x.cols());
  const Matrix xtxi = x.transpose() * xi;
  const Scalar residual = (xtxi + xtxi.transpose()).norm();
  return residual <= tol * std::max<Scalar>(1, x.norm() * xi.norm());
}

} // namespace landing
