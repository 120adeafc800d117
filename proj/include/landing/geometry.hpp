#pragma once

// Metric-dependent objects on the layer manifold St_{X^T X}: normal space,
// projection onto the tangent space, and the unconstrained/constrained
// Riemannian gradients under the ambient beta-metric.

#include <landing/metric.hpp>

namespace landing {

/// Least-squares residual of eta against the normal basis
/// { X (X^T X)^{-1} (e_i e_j^T + e_j e_i^T) : i <= j } is <= tol * ||eta||.
/// The normal space is the same for every beta.
bool is_normal(const AmbientPoint &x, const Matrix &eta, Scalar tol);

/// Orthogonal projection onto T_X St_{X^T X}:
///   X (X^T X)^{-1} skew(X^T Z) + (I - X (X^T X)^{-1} X^T) Z.
/// Independent of beta.
Matrix project_tangent(const AmbientPoint &x, const Matrix &z);

/// (I + (1-beta)/beta X (X^T X)^{-1} X^T) grad_E X^T X.
Matrix grad_unconstrained(const AmbientPoint &x, const MetricParam &beta,
                          const Matrix &eucl_grad);

/// grad_E X^T X - 1/(2 beta) X grad_E^T X
///   + (1/(2 beta) - 1) X (X^T X)^{-1} X^T grad_E X^T X.
Matrix grad_constrained(const AmbientPoint &x, const MetricParam &beta,
                        const Matrix &eucl_grad);

/// beta = 1/2 case, 2 skew(grad_E X^T) X, evaluated as
/// grad_E X^T X - X grad_E^T X without forming n x n matrices.
Matrix grad_canonical(const AmbientPoint &x, const Matrix &eucl_grad);

/// Dh(X)[xi] = X^T xi + xi^T X.
Matrix first_order_feasibility_drift(const Matrix &x, const Matrix &xi);

struct GradientPair {
  Matrix euclidean;
  Matrix beta_unconstrained;
  Matrix beta_constrained;
  AmbientPoint base;
  MetricParam beta;
};

GradientPair gradients(const AmbientPoint &x, const MetricParam &beta,
                       const Matrix &eucl_grad);

} // namespace landing
