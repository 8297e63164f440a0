#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cdgbn/linalg.hpp"
#include "cdgbn/models.hpp"

namespace cdgbn {

struct IntegratorConfig {
  double rtol = 1e-12;
  double atol = 1e-12;
  double max_step = 1e-1;
  std::int64_t max_rhs_evals = 2'000'000;  ///< budget per sampling interval
  double newton_tol = 1e-10;
  int newton_max_iters = 20;
};

enum class IntegrateStatus { converged, budget_exhausted, nonfinite };

struct IntegrationOutcome {
  Vector y_final;
  std::int64_t rhs_evals = 0;
  std::int64_t steps_accepted = 0;
  std::int64_t steps_rejected = 0;
  IntegrateStatus status = IntegrateStatus::converged;
};

const char* to_string(IntegrateStatus s);

using OdeRhs = std::function<void(double, const Vector&, Vector&)>;
using OdeJacobian = std::function<void(double, const Vector&, Matrix&)>;
/// Invoked after every accepted step with (t_before, t_after, y_after).
using StepObserver = std::function<void(double, double, const Vector&)>;

/// Adaptive integration of y' = rhs(t, y) from t0 to t1 with an L-stable
/// singly-diagonally-implicit Runge-Kutta pair (orders 4/3). Newton solves
/// use `rhs_jacobian` when given and internal finite differences otherwise.
/// Budget exhaustion and non-finite states are reported in the outcome
/// status, not thrown; `y_final` then holds the last accepted state.
IntegrationOutcome integrate_stiff(const OdeRhs& rhs, const OdeJacobian& rhs_jacobian,
                                   const Vector& y0, double t0, double t1,
                                   const IntegratorConfig& cfg,
                                   const StepObserver& observer = nullptr);

/// First two moments of a filter state.
struct GaussianBelief {
  Vector mean;
  Matrix cov;
};

/// True when cov is symmetric to 1e-12 (absolute) and its smallest
/// eigenvalue is >= -1e-10 * trace.
bool is_valid(const GaussianBelief& b);

/// Propagates mean and covariance through
///   x' = f(t, x),   P' = J P + P J^T + G Q G^T
/// as one flat stiff ODE. The returned covariance is re-symmetrized.
std::pair<GaussianBelief, IntegrationOutcome> propagate_moments(
    const DriftModel& drift, const GaussianBelief& belief, double t0, double t1,
    const IntegratorConfig& cfg);

/// Advances every point through x' = f(t, x) as one stacked ODE so the
/// whole bundle shares the adaptive step sequence.
std::pair<std::vector<Vector>, IntegrationOutcome> propagate_point_bundle(
    const DriftModel& drift, const std::vector<Vector>& points, double t0, double t1,
    const IntegratorConfig& cfg);

}  // namespace cdgbn
