#include <landing/problems.hpp>

#include <sstream>

namespace landing {

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
  std::normal_distribution<Scalar> normal;
  Matrix out(rows, cols);
  // column-major fill keeps the draw order independent of Eigen internals
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      out(i, j) = normal(rng);
  return out;
}

Matrix random_stiefel(Eigen::Index n, Eigen::Index p, Rng &rng) {
  if (p > n)
    throw DimensionError("random_stiefel: p must satisfy p <= n");
  const Matrix g = gaussian_matrix(n, p, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, p);
  const Matrix r = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < p; ++j)
    if (r(j, j) < 0)
      q.col(j) *= -1;
  return q;
}

Matrix random_symmetric(Eigen::Index n, Rng &rng) {
  const Matrix g = gaussian_matrix(n, n, rng);
  Matrix a = g.triangularView<Eigen::Upper>();
  a.triangularView<Eigen::StrictlyLower>() = a.transpose();
  return a;
}

Objective rayleigh(const Matrix &a, Eigen::Index p) {
  if (a.rows() != a.cols())
    throw DimensionError("rayleigh: A must be square");
  if (p < 1 || p > a.rows())
    throw DimensionError("rayleigh: p must satisfy 1 <= p <= n");
  const Scalar asym = (a - a.transpose()).norm();
  if (asym > 1e-12 * std::max<Scalar>(1, a.norm()))
    throw std::invalid_argument("rayleigh: A must be symmetric");

  const Eigen::Index n = a.rows();
  Objective obj;
  obj.name = "rayleigh";
  obj.n = n;
  obj.p = p;
  obj.eval = [a, n, p](const Matrix &x) {
    check_shape("rayleigh", x.rows(), x.cols(), n, p);
    return (x.transpose() * a * x).trace();
  };
  obj.eucl_grad = [a, n, p](const Matrix &x) -> Matrix {
    check_shape("rayleigh", x.rows(), x.cols(), n, p);
    return 2.0 * a * x;
  };
  return obj;
}

Objective procrustes(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << "procrustes: A has " << a.rows() << " rows but B has " << b.rows();
    throw DimensionError(msg.str());
  }
  if (b.cols() > a.cols())
    throw DimensionError("procrustes: p must satisfy p <= n");

  const Eigen::Index n = a.cols();
  const Eigen::Index p = b.cols();
  Objective obj;
  obj.name = "procrustes";
  obj.n = n;
  obj.p = p;
  obj.eval = [a, b, n, p](const Matrix &x) {
    check_shape("procrustes", x.rows(), x.cols(), n, p);
    return 0.5 * (a * x - b).squaredNorm();
  };
  obj.eucl_grad = [a, b, n, p](const Matrix &x) -> Matrix {
    check_shape("procrustes", x.rows(), x.cols(), n, p);
    return a.transpose() * (a * x - b);
  };
  return obj;
}

ProblemKind parse_problem_kind(const std::string &name) {
  if (name == "rayleigh")
    return ProblemKind::rayleigh;
  if (name == "procrustes")
    return ProblemKind::procrustes;
  throw std::invalid_argument("unknown problem kind '" + name + "'");
}

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::rayleigh ? "rayleigh" : "procrustes";
}

Matrix random_initial_point(Eigen::Index n, Eigen::Index p,
                            std::optional<Scalar> delta, Rng &rng) {
  if (!delta) {
    for (;;) {
      Matrix x = gaussian_matrix(n, p, rng);
      if (sigma_ratio(x) >= 1e-6)
        return x;
    }
  }
  if (*delta < 0)
    throw std::invalid_argument("random_instance: delta must be nonnegative");

  const Matrix q = random_stiefel(n, p, rng);
  for (;;) {
    Vector d = gaussian_matrix(p, 1, rng).col(0);
    d /= d.norm();
    // Q (I + delta/2 D): h(X0) = delta D + delta^2/4 D^2, so ||h(X0)|| ~ delta
    const Vector scale = Vector::Ones(p) + 0.5 * *delta * d;
    if (scale.minCoeff() > 1e-3 * scale.maxCoeff())
      return q * scale.asDiagonal();
  }
}

ProblemInstance random_instance(ProblemKind kind, Eigen::Index n, Eigen::Index p,
                                std::uint64_t seed, std::optional<Scalar> delta) {
  if (p < 1 || p > n)
    throw DimensionError("random_instance: p must satisfy 1 <= p <= n");
  Rng rng(seed);
  ProblemInstance inst;
  inst.seed = seed;

  if (kind == ProblemKind::rayleigh) {
    const Matrix q = random_stiefel(n, n, rng);
    const Vector spectrum =
        Vector::LinSpaced(n, 1, static_cast<Scalar>(n)) / static_cast<Scalar>(n);
    const Matrix a = sym(q * spectrum.asDiagonal() * q.transpose());
    inst.objective = rayleigh(a, p);
    inst.optimum = spectrum.head(p).sum();
    inst.optimum_source = "sum of the p smallest eigenvalues of A";
  } else {
    // singular values evenly spaced in [1/2, 1] keep A^T A at unit scale
    const Matrix u = random_stiefel(n, n, rng);
    const Matrix v = random_stiefel(n, n, rng);
    const Vector sv = n > 1 ? Vector(Vector::LinSpaced(n, 0.5, 1.0)) : Vector::Ones(1);
    const Matrix a = u * sv.asDiagonal() * v.transpose();
    const Matrix target = random_stiefel(n, p, rng);
    inst.objective = procrustes(a, a * target);
    inst.optimum = 0.0;
    inst.optimum_source = "B = A X_* with X_* on St(n,p)";
  }
  inst.x0 = random_initial_point(n, p, delta, rng);
  return inst;
}

} // namespace landing
