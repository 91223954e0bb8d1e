#include "coexkit/rng.hpp"

#include <cmath>

namespace coexkit {

double SplitMix64::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_pos();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(6.283185307179586476925286766559 * u2);
  have_spare_ = true;
  return mag * std::cos(6.283185307179586476925286766559 * u2);
}

SplitMix64 SplitMix64::fork(uint64_t stream) const {
  // Feed the stream id through one splitmix step keyed off the current state.
  uint64_t z = state_ + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return SplitMix64(z ^ (z >> 31));
}

CVector random_unit_vector(SplitMix64& rng, int dim) {
  CVector x(static_cast<size_t>(dim));
  double n = 0.0;
  do {
    for (auto& c : x) c = Complex{rng.gaussian(), rng.gaussian()};
    n = norm2(x);
  } while (n < 1e-6);
  for (auto& c : x) c /= n;
  return x;
}

}  // namespace coexkit
