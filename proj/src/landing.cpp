#include <landing/landing.hpp>

#include <cmath>
#include <sstream>

namespace landing {

void LandingConfig::validate() const {
  if (!(omega > 0))
    throw std::invalid_argument("LandingConfig: omega must be positive");
  if (!(epsilon > 0))
    throw std::invalid_argument("LandingConfig: epsilon must be positive");
  if (max_iters < 1)
    throw std::invalid_argument("LandingConfig: max_iters must be at least 1");
  if (step.eta && !(*step.eta > 0))
    throw std::invalid_argument("LandingConfig: step size must be positive");
  if (!(step.shrink > 0 && step.shrink < 1 && step.growth >= 1))
    throw std::invalid_argument(
        "LandingConfig: need 0 < shrink < 1 <= growth");
  if (!(rank_floor >= 0))
    throw std::invalid_argument("LandingConfig: rank_floor must be nonnegative");
}

std::string to_string(LandingStatus status) {
  switch (status) {
  case LandingStatus::converged:
    return "converged";
  case LandingStatus::max_iters:
    return "max_iters";
  case LandingStatus::rank_breakdown:
    return "rank_breakdown";
  case LandingStatus::step_failure:
    return "step_failure";
  }
  return "unknown";
}

Matrix landing_direction(const AmbientPoint &x, const MetricParam &beta,
                         Scalar omega, const Matrix &eucl_grad) {
  return grad_constrained(x, beta, eucl_grad) +
         omega * grad_infeasibility(x.matrix());
}

AmbientPoint landing_step(const AmbientPoint &x, const MetricParam &beta,
                          Scalar omega, Scalar eta, const Matrix &eucl_grad,
                          Scalar rank_floor) {
  if (!(eta > 0) || !(omega > 0))
    throw std::invalid_argument("landing_step: eta and omega must be positive");
  Matrix next = x.matrix() - eta * landing_direction(x, beta, omega, eucl_grad);
  try {
    return AmbientPoint(std::move(next), rank_floor);
  } catch (const SingularLayerError &e) {
    throw RankBreakdownError(std::string("landing_step: ") + e.what());
  }
}

Scalar merit_value(const Objective &objective, const Matrix &x, Scalar omega) {
  return objective.eval(x) + omega * infeasibility(x);
}

namespace {

std::optional<AmbientPoint> try_point(Matrix x, Scalar rank_floor) {
  try {
    return AmbientPoint(std::move(x), rank_floor);
  } catch (const SingularLayerError &) {
    return std::nullopt;
  }
}

} // namespace

LandingResult solve(const Objective &objective, const Matrix &x0,
                    const LandingConfig &config) {
  config.validate();
  check_shape("solve", x0.rows(), x0.cols(), objective.n, objective.p);

  AmbientPoint x(x0, config.rank_floor);
  const Scalar omega = config.omega;
  const StepPolicy &policy = config.step;
  Scalar eta = policy.eta.value_or(default_step_size(x));

  std::vector<IterationRecord> trace;
  LandingStatus status = LandingStatus::max_iters;

  for (int k = 0;; ++k) {
    const Matrix &X = x.matrix();
    const Matrix eucl_grad = objective.eucl_grad(X);
    const Matrix grad = grad_constrained(x, config.beta, eucl_grad);
    const Matrix h = constraint_h(X).matrix();

    IterationRecord rec;
    rec.k = k;
    rec.f_value = objective.eval(X);
    rec.grad_norm = grad.norm();
    const Scalar h_sq = h.squaredNorm();
    rec.h_norm = std::sqrt(h_sq);
    rec.N_value = 0.5 * h_sq;
    rec.sigma_min_ratio = x.sigma_ratio();
    trace.push_back(rec);

    if (rec.grad_norm + rec.h_norm <= config.epsilon) {
      status = LandingStatus::converged;
      break;
    }
    if (k >= config.max_iters) {
      status = LandingStatus::max_iters;
      break;
    }

    const Matrix direction = grad + omega * (X * h);
    std::optional<AmbientPoint> next;
    Scalar step = eta;

    if (policy.kind == StepPolicy::Kind::fixed) {
      // rank safeguard: halve at most 60 times, for this step only
      for (int attempt = 0; attempt <= 60 && step >= kMinStep; ++attempt) {
        next = try_point(X - step * direction, config.rank_floor);
        if (next)
          break;
        step *= 0.5;
      }
      if (!next) {
        status = LandingStatus::rank_breakdown;
        break;
      }
    } else {
      const Scalar merit0 = rec.f_value + omega * rec.N_value;
      const Scalar dir_sq = direction.squaredNorm();
      bool rank_failed = false;
      while (step >= kMinStep) {
        auto candidate = try_point(X - step * direction, config.rank_floor);
        if (candidate) {
          const Scalar merit = merit_value(objective, candidate->matrix(), omega);
          if (merit <= merit0 - 1e-4 * step * dir_sq) {
            next = std::move(candidate);
            break;
          }
        }
        rank_failed = !candidate;
        step *= policy.shrink;
      }
      if (!next) {
        status = rank_failed ? LandingStatus::rank_breakdown
                             : LandingStatus::step_failure;
        break;
      }
      eta = step * policy.growth;
    }

    trace.back().eta = step;
    x = std::move(*next);
  }

  return LandingResult{std::move(x), std::move(trace), status};
}

} // namespace landing
