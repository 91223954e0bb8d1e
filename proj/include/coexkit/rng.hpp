#pragma once

#include <cstdint>

#include "coexkit/matrix.hpp"

namespace coexkit {

/// SplitMix64. Structured sampling derives an independent stream per item
/// via fork(), so results do not depend on evaluation order or thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Independent child stream; deterministic in (current seed, stream id).
  SplitMix64 fork(uint64_t stream) const;

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Unit vector uniform on the complex sphere (normalized Gaussian components).
CVector random_unit_vector(SplitMix64& rng, int dim);

}  // namespace coexkit
