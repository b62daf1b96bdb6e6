#pragma once

#include <cmath>
#include <cstdint>

#include "specnorm/tensor.hpp"

namespace specnorm {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based generator: the i-th draw is a pure function of (seed, stream, i),
// so results are reproducible regardless of evaluation order or thread count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(splitmix64(seed ^ splitmix64(stream ^ 0x632be59bd9b4e019ull))) {}

  std::uint64_t next_bits() { return splitmix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  // Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(next_bits() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cosine branch).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline Tensor normal_tensor(std::vector<std::size_t> shape, std::uint64_t seed,
                            std::uint64_t stream = 0) {
  Tensor t(std::move(shape));
  CounterRng rng(seed, stream);
  for (double& v : t.data) v = rng.normal();
  return t;
}

}  // namespace specnorm
