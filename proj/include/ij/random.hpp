#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ij/geometry.hpp"

namespace ij {

// SplitMix64 (Steele, Lea, Flood). Fixed so that every seed reproduces the
// same point sets on any platform; the name is stamped into reports.
class SplitMix64 {
 public:
  static constexpr std::string_view name = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
      const std::uint64_t r = next();
      if (r >= limit) return r % bound;
    }
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Independent child stream.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class Shape { RandomDisk, Convex, Horton };

Shape parse_shape(std::string_view name);
std::string_view to_string(Shape shape);

struct GenOptions {
  Coord radius = 0;  // random-disk radius; 0 picks max(64, 16n)
  std::size_t max_attempts_per_point = 10'000;
};

// Deterministic in (shape, n, seed). random-disk resamples any point that
// would repeat a point or complete a collinear triple; convex draws distinct
// abscissae on the parabola y = x^2.
std::vector<Point> generate_points(Shape shape, std::size_t n, std::uint64_t seed,
                                   const GenOptions& options = {});

}  // namespace ij
