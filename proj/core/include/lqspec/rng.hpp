#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace lqspec {

// std::mt19937_64 is specified bit-exactly by the standard; the conversions
// below avoid the implementation-defined std distributions so that sampled
// sequences are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t index(std::size_t n) {
    const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lqspec
