#include "golden/sampling.hpp"

namespace golden {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
  for (const char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

std::vector<Vec> sample_points(const std::vector<Interval>& box, int count,
                               Rng& rng) {
  std::vector<Vec> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) {
    Vec p(box.size());
    for (std::size_t i = 0; i < box.size(); ++i)
      p(i) = rng.uniform(box[i].lo, box[i].hi);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace golden
