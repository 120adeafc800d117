#pragma once

// Retraction-free landing iteration
//
//   X_{k+1} = X_k - eta_k (grad_beta f(X_k) + omega grad N(X_k)),
//
// stopped once ||grad_beta f(X_k)||_F + ||h(X_k)||_F <= epsilon. The normal
// term always uses the Euclidean gradient of N, whatever beta is.

#include <landing/geometry.hpp>
#include <landing/problems.hpp>

#include <optional>
#include <string>
#include <vector>

namespace landing {

struct StepPolicy {
  enum class Kind { fixed, backtracking };

  Kind kind = Kind::fixed;
  /// Fixed step, or initial step for backtracking. Defaults to
  /// 0.1 / (1 + sigma_max(X0)^2).
  std::optional<Scalar> eta;
  Scalar shrink = 0.5;
  Scalar growth = 1.1;

  static StepPolicy fixed(std::optional<Scalar> eta = std::nullopt) {
    return StepPolicy{Kind::fixed, eta};
  }
  static StepPolicy backtracking(std::optional<Scalar> eta = std::nullopt,
                                 Scalar shrink = 0.5, Scalar growth = 1.1) {
    return StepPolicy{Kind::backtracking, eta, shrink, growth};
  }
};

struct LandingConfig {
  MetricParam beta{0.5};
  Scalar omega = 1.0;
  Scalar epsilon = 1e-8;
  int max_iters = 10000;
  StepPolicy step;
  Scalar rank_floor = kDefaultRankFloor;

  /// Throws std::invalid_argument on omega <= 0, epsilon <= 0,
  /// max_iters < 1, eta <= 0, or shrink/growth outside 0 < shrink < 1 <= growth.
  void validate() const;
};

struct IterationRecord {
  int k = 0;
  Scalar f_value = 0;
  Scalar grad_norm = 0; ///< Frobenius norm of grad_beta f
  Scalar h_norm = 0;
  Scalar N_value = 0;
  Scalar eta = 0; ///< step taken from this iterate, 0 on the last record
  Scalar sigma_min_ratio = 0;
};

enum class LandingStatus { converged, max_iters, rank_breakdown, step_failure };

std::string to_string(LandingStatus status);

struct LandingResult {
  AmbientPoint final_point;
  std::vector<IterationRecord> trace;
  LandingStatus status;
};

/// Smallest step the rank safeguard and the backtracking search will try.
inline constexpr Scalar kMinStep = 1e-16;

inline Scalar default_step_size(const AmbientPoint &x0) {
  return 0.1 / (1 + x0.sigma_max() * x0.sigma_max());
}

/// Landing direction grad_beta f(X) + omega X (X^T X - I).
Matrix landing_direction(const AmbientPoint &x, const MetricParam &beta,
                         Scalar omega, const Matrix &eucl_grad);

/// X - eta (grad_beta f(X) + omega grad N(X)). Throws RankBreakdownError if
/// the result falls below rank_floor.
AmbientPoint landing_step(const AmbientPoint &x, const MetricParam &beta,
                          Scalar omega, Scalar eta, const Matrix &eucl_grad,
                          Scalar rank_floor = kDefaultRankFloor);

/// f(X) + omega N(X), the acceptance measure of the backtracking policy.
Scalar merit_value(const Objective &objective, const Matrix &x, Scalar omega);

/// Runs the landing iteration from x0. The trace holds one record per
/// iterate, starting at k = 0. Deterministic for fixed inputs.
LandingResult solve(const Objective &objective, const Matrix &x0,
                    const LandingConfig &config);

} // namespace landing
