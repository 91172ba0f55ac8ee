#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace ssg {

// All randomness goes through std::mt19937_64 (its output sequence is fixed
// by the C++ standard) seeded with the 64-bit seed. Bounded draws use
// rejection sampling on raw 64-bit outputs so results do not depend on a
// standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }
  // 53 random bits scaled to [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Fisher-Yates, from the last index down.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ssg
