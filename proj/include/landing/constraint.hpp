#pragma once

// The orthogonality constraint h(X) = X^T X - I, the infeasibility
// N(X) = 1/2 ||h(X)||^2, and the tangent-space machinery of the layer
// manifold St_{X^T X} = { Y : Y^T Y = X^T X }.

#include <landing/types.hpp>

#include <vector>

namespace landing {

/// Default relative threshold on sigma_min(X) / sigma_max(X).
inline constexpr Scalar kDefaultRankFloor = 1e-10;

/// A full-rank n x p matrix (p <= n) together with a Cholesky factorization
/// of its Gram matrix X^T X. (X^T X)^{-1} is only ever applied through that
/// factorization.
class AmbientPoint {
public:
  /// Throws DimensionError if p > n or X is empty, SingularLayerError if
  /// sigma_min(X) < rank_floor * sigma_max(X).
  explicit AmbientPoint(Matrix x, Scalar rank_floor = kDefaultRankFloor);

  const Matrix &matrix() const { return x_; }
  Eigen::Index rows() const { return x_.rows(); }
  Eigen::Index cols() const { return x_.cols(); }

  /// X^T X, exactly symmetric.
  const Matrix &gram() const { return gram_; }

  /// (X^T X)^{-1} B.
  Matrix solve_gram(const Matrix &b) const { return gram_llt_.solve(b); }

  /// B (X^T X)^{-1}.
  Matrix solve_gram_right(const Matrix &b) const {
    return gram_llt_.solve(b.transpose()).transpose();
  }

  Scalar sigma_max() const { return sigma_max_; }
  Scalar sigma_min() const { return sigma_min_; }
  Scalar sigma_ratio() const { return sigma_max_ > 0 ? sigma_min_ / sigma_max_ : 0; }

private:
  Matrix x_;
  Matrix gram_;
  Eigen::LLT<Matrix> gram_llt_;
  Scalar sigma_max_ = 0;
  Scalar sigma_min_ = 0;
};

/// sigma_min(X) / sigma_max(X), 0 for the zero matrix.
Scalar sigma_ratio(const Matrix &x);

class SymMatrix {
public:
  /// Stores sym(a).
  explicit SymMatrix(const Matrix &a);
  const Matrix &matrix() const { return m_; }

private:
  Matrix m_;
};

class SkewMatrix {
public:
  /// Stores skew(a).
  explicit SkewMatrix(const Matrix &a);
  const Matrix &matrix() const { return m_; }

private:
  Matrix m_;
};

/// Orthonormal basis X_perp of span(X)^perp, n x (n - p).
struct OrthoComplement {
  Matrix basis;
};

/// Basis of T_X St_{X^T X}. Rotational vectors X (X^T X)^{-1} (e_i e_j^T -
/// e_j e_i^T), i < j in lexicographic order, come first; then X_perp e_k e_l^T
/// in column-major order over (k, l).
struct TangentBasis {
  std::vector<Matrix> vectors;

  std::size_t size() const { return vectors.size(); }
  /// Vectorized basis as the columns of an np x dim matrix.
  Matrix stacked() const;
};

/// h(X) = X^T X - I_p. Throws DimensionError when p > n.
SymMatrix constraint_h(const Matrix &x);

/// N(X) = 1/2 ||h(X)||_F^2.
Scalar infeasibility(const Matrix &x);

/// Euclidean gradient of N: X (X^T X - I_p).
Matrix grad_infeasibility(const Matrix &x);

/// Phi_{X^T X}(Y) = Y (X^T X)^{1/2} with the principal SPD square root.
/// Maps St(n,p) onto the layer through X.
Matrix phi_map(const AmbientPoint &x, const Matrix &y);

OrthoComplement ortho_complement(const AmbientPoint &x);

TangentBasis tangent_basis(const AmbientPoint &x);

/// Dimension of the layer manifold, np - p(p+1)/2.
inline Eigen::Index tangent_dimension(Eigen::Index n, Eigen::Index p) {
  return n * p - p * (p + 1) / 2;
}

/// ||xi^T X + X^T xi|| <= tol * max(1, ||X|| ||xi||).
bool is_tangent(const Matrix &x, const Matrix &xi, Scalar tol);

} // namespace landing
