#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cdgbn/models.hpp"
#include "cdgbn/rng.hpp"

namespace cdgbn {

struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One reference trajectory plus the measurement sequence every filter
/// under comparison consumes.
struct TruthRun {
  std::vector<double> times;         ///< t_0 .. t_K, uniform spacing delta
  std::vector<Vector> states;        ///< x_ref(t_k)
  std::vector<Vector> measurements;  ///< z_k; z_0 is generated but unused by filters
  int run_index = 0;
  std::uint64_t seed = 0;
};

enum class NoiseChannel : std::uint64_t { process = 1, measurement = 2, init = 3 };

/// Independent standard-normal stream for (seed, run_index, channel).
/// Same triple, same draws, on any platform.
GaussianStream noise_stream(std::uint64_t seed, int run_index, NoiseChannel channel);

/// Simulates the SDE with a drift-implicit Euler-Maruyama scheme at internal
/// step h = min(1e-4, delta/1000), recording states and noisy measurements on
/// the sampling grid t_k = k * delta. The initial truth state is drawn from
/// N(x0, P0). Throws SimulationError when the state leaves the finite range.
TruthRun simulate_truth(const Scenario& scenario, double delta, int run_index);

}  // namespace cdgbn
