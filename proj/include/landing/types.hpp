#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace landing {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Raised when shapes are incompatible (e.g. p > n, or operands of
/// different sizes).
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// Raised when X is too close to rank deficiency for (X^T X)^{-1} to be
/// meaningful.
class SingularLayerError : public std::runtime_error {
public:
  explicit SingularLayerError(const std::string &what)
      : std::runtime_error(what) {}
};

/// Raised by the landing step when the candidate iterate drops below the
/// configured rank floor.
class RankBreakdownError : public SingularLayerError {
public:
  explicit RankBreakdownError(const std::string &what)
      : SingularLayerError(what) {}
};

/// Raised by the brute-force oracles when their linear systems are too
/// ill-conditioned to be trusted.
class IllConditionedError : public std::runtime_error {
public:
  explicit IllConditionedError(const std::string &what)
      : std::runtime_error(what) {}
};

void check_shape(const char *where, Eigen::Index rows, Eigen::Index cols,
                 Eigen::Index expected_rows, Eigen::Index expected_cols);

/// Frobenius inner product trace(A^T B).
inline Scalar frobenius_inner(const Matrix &a, const Matrix &b) {
  return (a.array() * b.array()).sum();
}

inline Matrix sym(const Matrix &a) { return 0.5 * (a + a.transpose()); }
inline Matrix skew(const Matrix &a) { return 0.5 * (a - a.transpose()); }

/// Column-major vectorization.
inline Vector vec(const Matrix &a) {
  return Eigen::Map<const Vector>(a.data(), a.size());
}

inline Matrix unvec(const Vector &v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

} // namespace landing
