#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "golden/types.hpp"

namespace golden {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Deterministic uniform source. mt19937_64 output is specified exactly by
/// the standard and the [0,1) mapping below avoids distribution objects,
/// whose streams are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() {  // [0,1), 53-bit resolution
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(unit() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

/// FNV-1a fold of a label into a seed, so independent checks draw
/// independent but reproducible streams.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view label);

struct SamplePlan {
  std::uint64_t seed = kDefaultSeed;
  int points = 100;
  int fields_per_point = 20;
};

std::vector<Vec> sample_points(const std::vector<Interval>& box, int count,
                               Rng& rng);

}  // namespace golden
