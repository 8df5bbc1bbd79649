#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace feynkit {

/// Monte Carlo estimate with its 1-sigma standard error.
struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// xoshiro256++ seeded through splitmix64. Self-contained so streams are
/// reproducible independently of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double gaussian();

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

 private:
  std::uint64_t s_[4];
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Single-sequence mode: one RNG stream consumed in order. Otherwise the
  /// sample range is split into fixed-size chunks with per-chunk derived
  /// seeds; chunk partials are reduced in chunk order, so the result does
  /// not depend on the worker count.
  bool deterministic = false;
};

/// Runs `sample(rng)` the configured number of times and returns the mean
/// with its standard error. Throws std::invalid_argument for zero samples.
IntegralEstimate run_monte_carlo(const McConfig& cfg, const std::function<double(Rng&)>& sample);

}  // namespace feynkit
