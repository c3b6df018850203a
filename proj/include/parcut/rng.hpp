#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace parcut {

using Engine = std::mt19937_64;

// Seed holder. The child stream for (label, index) depends only on
// (seed, label, index).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  SeededRng derive(std::string_view label, std::uint64_t index = 0) const;

  Engine engine() const { return Engine(seed_); }

 private:
  std::uint64_t seed_;
};

std::uint64_t mix64(std::uint64_t x);

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace parcut
