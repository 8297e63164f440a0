#pragma once

#include <cstdint>

namespace cdgbn {

/// SplitMix64 finalizer; also used to key sub-streams.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// xoshiro256++ with SplitMix64 seeding. Integer-only state transitions,
/// so sequences are identical on every platform for the same seed.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  std::uint64_t next_u64();
  /// Uniform double in [0, 1) using the top 53 bits.
  double next_unit();

 private:
  std::uint64_t s_[4];
};

/// Standard-normal stream via the Marsaglia polar transform on a
/// Xoshiro256pp source.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed);
  double next();

 private:
  Xoshiro256pp gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cdgbn
