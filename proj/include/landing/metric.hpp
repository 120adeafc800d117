#pragma once

// The beta-metric family. On St(n,p) it reads <xi, (I - (1-beta) X X^T) zeta>;
// on full-rank matrices it is pulled back through Phi_{X^T X}:
//
//   g^beta_X(xi, zeta) = <xi, (I - (1-beta) X (X^T X)^{-1} X^T) zeta (X^T X)^{-1}>.
//
// beta = 1 is the Euclidean metric on St(n,p), beta = 1/2 the canonical one.

#include <landing/constraint.hpp>

namespace landing {

class MetricParam {
public:
  /// Throws std::invalid_argument unless beta > 0 and finite.
  explicit MetricParam(Scalar beta);
  Scalar beta() const { return beta_; }

private:
  Scalar beta_;
};

/// Coefficients of eta = X A + X_perp B.
struct TangentDecomposition {
  Matrix a; ///< p x p
  Matrix b; ///< (n-p) x p
  AmbientPoint base;
  OrthoComplement complement;

  Matrix reconstruct() const {
    return base.matrix() * a + complement.basis * b;
  }
};

/// Ambient beta-metric, O(np^2): two p x p solves, no n x n matrices.
Scalar metric_eval(const AmbientPoint &x, const MetricParam &beta,
                   const Matrix &xi, const Matrix &zeta);

/// Stiefel beta-metric. Throws std::invalid_argument if ||X^T X - I|| > 1e-10.
Scalar metric_eval_stiefel(const Matrix &x, const MetricParam &beta,
                           const Matrix &xi, const Matrix &zeta);

/// A = (X^T X)^{-1} X^T eta, B = X_perp^T eta (X_perp orthonormal).
TangentDecomposition decompose(const AmbientPoint &x,
                               const OrthoComplement &complement,
                               const Matrix &eta);

/// beta tr(A_eta^T X^T X A_xi (X^T X)^{-1}) + tr(B_eta^T X_perp^T X_perp B_xi (X^T X)^{-1}).
/// Throws std::invalid_argument if the decompositions do not share a base
/// point and complement.
Scalar metric_eval_decomposed(const TangentDecomposition &eta,
                              const TangentDecomposition &xi,
                              const MetricParam &beta);

/// np x np matrix G with vec(xi)^T G vec(zeta) = g^beta_X(xi, zeta), using
/// column-major vec. Built as the Kronecker product (X^T X)^{-1} (x) L with an
/// explicit L = I - (1-beta) X (X^T X)^{-1} X^T; intended for oracles only.
Matrix gram_matrix(const AmbientPoint &x, const MetricParam &beta);

} // namespace landing
