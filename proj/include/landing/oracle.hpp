#pragma once

// Brute-force references for the closed-form formulas. None of these call
// the closed forms they are meant to check: the gradient oracle only uses
// gram_matrix, the projection oracle only tangent_basis and gram_matrix.

#include <landing/metric.hpp>

#include <functional>
#include <utility>

namespace landing::oracle {

/// Largest Gram condition number an oracle accepts.
inline constexpr Scalar kMaxCondition = 1e10;

/// |a - b| / max(1, |a|, |b|).
Scalar relative_error(Scalar a, Scalar b);

/// ||a - b|| / max(||a||, ||b||), 0 when both are zero.
Scalar relative_error(const Matrix &a, const Matrix &b);

/// Default finite-difference step 1e-6 (1 + ||X||).
Scalar default_fd_step(const Matrix &x);

/// (fun(X + t xi) - fun(X - t xi)) / (2 t).
Scalar fd_directional(const std::function<Scalar(const Matrix &)> &fun,
                      const Matrix &x, const Matrix &xi, Scalar step);

/// Solves gram_matrix(X, beta) vec(g) = vec(eucl_grad). Throws
/// IllConditionedError if cond(G) > kMaxCondition.
Matrix gradient_via_gram(const AmbientPoint &x, const MetricParam &beta,
                         const Matrix &eucl_grad);

/// Minimizes g^beta(Z - xi, Z - xi) over span(tangent_basis(X)) through the
/// normal equations. Throws IllConditionedError if the reduced Gram matrix
/// has condition number above kMaxCondition.
Matrix projection_via_lsq(const AmbientPoint &x, const MetricParam &beta,
                          const Matrix &z);

/// Condition number of a symmetric positive-definite matrix.
Scalar spd_condition(const Matrix &g);

struct EigenReference {
  Scalar value;  ///< sum of the p smallest eigenvalues
  Matrix basis;  ///< orthonormal n x p basis of their invariant subspace
};

/// Dense symmetric eigendecomposition.
EigenReference eigen_reference(const Matrix &a, Eigen::Index p);

} // namespace landing::oracle
