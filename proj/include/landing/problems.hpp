#pragma once

#include <landing/constraint.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

namespace landing {

/// A smooth cost on R^{n x p} with its Euclidean gradient. Both callables
/// must be pure.
struct Objective {
  using Value = std::function<Scalar(const Matrix &)>;
  using Gradient = std::function<Matrix(const Matrix &)>;

  Value eval;
  Gradient eucl_grad;
  std::string name;
  Eigen::Index n = 0;
  Eigen::Index p = 0;
};

/// f(X) = tr(X^T A X), grad = 2 A X. Over St(n,p) the minimum is the sum of
/// the p smallest eigenvalues of A. Rejects non-symmetric A.
Objective rayleigh(const Matrix &a, Eigen::Index p);

/// f(X) = 1/2 ||A X - B||^2, grad = A^T (A X - B).
Objective procrustes(const Matrix &a, const Matrix &b);

enum class ProblemKind { rayleigh, procrustes };

struct ProblemInstance {
  Objective objective;
  Matrix x0;
  /// Known optimal value over St(n,p), when available.
  std::optional<Scalar> optimum;
  std::string optimum_source;
  std::uint64_t seed = 0;
};

/// Deterministic test instance.
///
/// Rayleigh: A = Q diag(1/n, 2/n, ..., 1) Q^T with Haar-random Q, so the
/// eigengap is 1/n and the optimum is p(p+1)/(2n).
/// Procrustes: square Gaussian A, B = A X_* for a random X_* in St(n,p); the
/// optimum is 0.
///
/// Without `delta`, X0 has standard normal entries (redrawn while
/// sigma_min/sigma_max < 1e-6). With `delta`, X0 = Q (I + delta D) for a
/// random Q in St(n,p) and a random diagonal D with ||D|| = 1, so that
/// ||h(X0)|| is of order delta; delta = 0 gives a feasible X0.
ProblemInstance random_instance(ProblemKind kind, Eigen::Index n, Eigen::Index p,
                                std::uint64_t seed,
                                std::optional<Scalar> delta = std::nullopt);

ProblemKind parse_problem_kind(const std::string &name);
std::string to_string(ProblemKind kind);

using Rng = std::mt19937_64;

/// Standard normal entries.
Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng);

/// Random matrix with orthonormal columns (QR of a Gaussian matrix with the
/// signs of diag(R) fixed to be positive).
Matrix random_stiefel(Eigen::Index n, Eigen::Index p, Rng &rng);

/// Starting point used by random_instance (see there for the meaning of
/// delta).
Matrix random_initial_point(Eigen::Index n, Eigen::Index p,
                            std::optional<Scalar> delta, Rng &rng);

/// Random symmetric matrix with standard normal upper triangle.
Matrix random_symmetric(Eigen::Index n, Rng &rng);

} // namespace landing
