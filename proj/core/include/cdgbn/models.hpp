#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cdgbn/linalg.hpp"

namespace cdgbn {

/// Continuous-time drift/diffusion model
///   dx = f(t, x) dt + G(t) dw,   cov(dw) = Q(t) dt
/// with an analytic Jacobian J = df/dx. Immutable after construction and
/// safe to share across worker threads.
struct DriftModel {
  int n = 0;  ///< state dimension
  int q = 0;  ///< noise dimension
  std::string name;
  std::function<Vector(double, const Vector&)> f;
  std::function<Matrix(double, const Vector&)> jacobian;
  std::function<Matrix(double)> diffusion;      ///< G(t), n x q
  std::function<Matrix(double)> process_noise;  ///< Q(t), q x q
};

/// Discrete measurement model z = h(x) + v, v ~ N(0, R).
struct MeasurementModel {
  int m = 0;  ///< measurement dimension
  std::string name;
  std::function<Vector(const Vector&)> h;
  std::function<Matrix(const Vector&)> jacobian;  ///< m x n at x
  Matrix noise;                                   ///< R, m x m SPD
};

/// A complete experiment description. `delta_grid` holds the sampling
/// periods to sweep; each run draws its noise from (seed, run_index).
struct Scenario {
  DriftModel drift;
  MeasurementModel measurement;
  Vector x0;
  Matrix P0;
  double t_end = 0.0;
  std::vector<double> delta_grid;
  int mc_runs = 10;
  std::uint64_t seed = 0;
  std::string label;
};

/// Number of sampling steps for one delta: the largest K with
/// K * delta <= t_end (+ slack 1e-9). Exactly t_end/delta when delta
/// divides the horizon.
int sampling_steps(double t_end, double delta);

/// Throws std::invalid_argument when dimensions disagree, P0 is not
/// symmetric positive definite, or the delta grid is unusable.
void validate(const Scenario& s);

/// dx = mu * x^j dt + dw, unit diffusion and noise covariance.
DriftModel dahlquist(double mu, int j);

/// Van der Pol oscillator with noise injected into the velocity only.
DriftModel vanderpol(double mu);

/// z = x1 + v, v ~ N(0, 0.04).
MeasurementModel scalar_identity_measurement();

/// z = x1 + x2 + v, v ~ N(0, 0.04).
MeasurementModel sum_measurement();

/// z = [[1, 1], [1, 1+sigma]] x + v, v ~ N(0, 0.04 I). Condition number of
/// the matrix grows like 4/sigma as sigma -> 0.
MeasurementModel ill_conditioned_measurement(double sigma);

}  // namespace cdgbn
