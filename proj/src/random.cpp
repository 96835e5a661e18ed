#include "ij/random.hpp"

#include <algorithm>
#include <string>

#include "ij/errors.hpp"
#include "ij/horton.hpp"

namespace ij {

Shape parse_shape(std::string_view name) {
  if (name == "random-disk") return Shape::RandomDisk;
  if (name == "convex") return Shape::Convex;
  if (name == "horton") return Shape::Horton;
  throw ParameterError("unknown shape '" + std::string(name) + "'");
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::RandomDisk: return "random-disk";
    case Shape::Convex: return "convex";
    case Shape::Horton: return "horton";
  }
  return "unknown";
}

namespace {

std::vector<Point> random_disk(std::size_t n, SplitMix64& rng, const GenOptions& options) {
  const Coord radius = options.radius > 0 ? options.radius
                                          : std::max<Coord>(64, 16 * static_cast<Coord>(n));
  const Wide r2 = Wide{radius} * radius;
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < options.max_attempts_per_point && !placed; ++attempt) {
      const Point p{rng.between(-radius, radius), rng.between(-radius, radius)};
      if (Wide{p.x} * p.x + Wide{p.y} * p.y > r2) continue;
      bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
      for (std::size_t i = 0; i < pts.size() && ok; ++i)
        for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
          ok = orientation(pts[i], pts[j], p) != Orientation::Collinear;
      if (ok) {
        pts.push_back(p);
        placed = true;
      }
    }
    if (!placed) throw GenerationFailure("random-disk: resampling budget exhausted");
  }
  return pts;
}

std::vector<Point> convex_arc(std::size_t n, SplitMix64& rng) {
  // n distinct abscissae from [0, 4n) by a partial Fisher-Yates shuffle.
  std::vector<Coord> xs(4 * n);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<Coord>(i);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(xs.size() - i));
    std::swap(xs[i], xs[j]);
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back({xs[i], xs[i] * xs[i]});
  return pts;
}

}  // namespace

std::vector<Point> generate_points(Shape shape, std::size_t n, std::uint64_t seed,
                                   const GenOptions& options) {
  if (n < 1) throw ParameterError("generate_points: need n >= 1");
  SplitMix64 rng(seed);
  switch (shape) {
    case Shape::RandomDisk: return random_disk(n, rng, options);
    case Shape::Convex: return convex_arc(n, rng);
    case Shape::Horton: {
      auto h = generate_horton(n);
      return {h.points.points().begin(), h.points.points().end()};
    }
  }
  throw ParameterError("generate_points: unknown shape");
}

}  // namespace ij
