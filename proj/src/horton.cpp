#include "ij/horton.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "ij/errors.hpp"

namespace ij {

namespace {

// y-coordinates for x = 0..n-1; lifts collected per depth.
std::vector<BigInt> horton_heights(std::size_t n, std::size_t depth,
                                   std::vector<std::vector<BigInt>>& lifts) {
  if (n <= 1) return std::vector<BigInt>(n, BigInt(0));
  auto low = horton_heights((n + 1) / 2, depth + 1, lifts);
  auto high = horton_heights(n / 2, depth + 1, lifts);
  const auto [lo, hi] = std::minmax_element(low.begin(), low.end());
  const BigInt spread = *hi - *lo;
  const BigInt lift = spread * BigInt(n + 1) + 1;
  if (lifts.size() <= depth) lifts.resize(depth + 1);
  lifts[depth].push_back(lift);
  std::vector<BigInt> ys(n);
  for (std::size_t j = 0; j < low.size(); ++j) ys[2 * j] = low[j];
  for (std::size_t j = 0; j < high.size(); ++j) ys[2 * j + 1] = high[j] + lift;
  return ys;
}

Coord to_coord(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Coord>::max()) || v < BigInt(std::numeric_limits<Coord>::min()))
    throw GenerationFailure("generate_horton: coordinates exceed the 64-bit range");
  return static_cast<Coord>(v);
}

}  // namespace

HortonSet generate_horton(std::size_t n) {
  if (n < 1) throw ParameterError("generate_horton: need n >= 1");
  std::vector<std::vector<BigInt>> big_lifts;
  auto ys = horton_heights(n, 0, big_lifts);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<Coord>(i), to_coord(ys[i])});
  HortonSet h;
  for (const auto& level : big_lifts) {
    auto& out = h.lifts.emplace_back();
    for (const auto& v : level) out.push_back(to_coord(v));
  }
  if (!verify_horton(pts)) {
    std::ostringstream msg;
    msg << "generate_horton: lift rule failed the high-above check for n = " << n;
    throw VerificationFailure(msg.str());
  }
  h.points = PointSet(std::move(pts));
  return h;
}

bool is_high_above(std::span<const Point> upper, std::span<const Point> lower) {
  auto distinct_x = [](std::span<const Point> s) {
    std::vector<Coord> xs;
    for (const Point& p : s) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!distinct_x(upper) || !distinct_x(lower)) return false;

  // For p left of q, r lies below line pq iff (p, q, r) turns clockwise.
  auto all_sides = [](std::span<const Point> pairs, std::span<const Point> probes, Orientation want) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        Point p = pairs[i], q = pairs[j];
        if (q.x < p.x) std::swap(p, q);
        for (const Point& r : probes)
          if (orientation(p, q, r) != want) return false;
      }
    return true;
  };
  return all_sides(upper, lower, Orientation::CW) && all_sides(lower, upper, Orientation::CCW);
}

bool verify_horton(std::span<const Point> pts) {
  if (pts.size() <= 1) return true;
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].x == sorted[i - 1].x) return false;
  std::vector<Point> even, odd;  // by 1-based label
  for (std::size_t i = 0; i < sorted.size(); ++i) (i % 2 == 1 ? even : odd).push_back(sorted[i]);
  return is_high_above(even, odd) && verify_horton(even) && verify_horton(odd);
}

int point_depth(std::size_t label) {
  if (label == 0) throw ParameterError("point_depth: labels are 1-based");
  return std::countr_zero(label) + 1;
}

int island_depth(const Island& island) {
  int depth = std::numeric_limits<int>::max();
  for (Index i : island.members) depth = std::min(depth, point_depth(static_cast<std::size_t>(i) + 1));
  return depth;
}

int depth_by_definition(std::span<const std::size_t> labels, std::size_t n) {
  std::vector<std::size_t> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = i + 1;
  int depth = 1;
  while (true) {
    std::vector<std::size_t> evens;
    for (std::size_t i = 1; i < current.size(); i += 2) evens.push_back(current[i]);
    const bool inside = std::all_of(labels.begin(), labels.end(), [&](std::size_t lab) {
      return std::binary_search(evens.begin(), evens.end(), lab);
    });
    if (evens.empty() || !inside) return depth;
    current = std::move(evens);
    ++depth;
  }
}

TriangleDepthCount triangle_depth_count(const HortonSet& h, std::size_t x, std::size_t y,
                                        std::size_t z) {
  const std::size_t n = h.size();
  if (x < 1 || y > n || z < 1 || z > n || x >= y)
    throw PreconditionViolation("triangle_depth_count: need 1 <= x < y <= n");
  const int pair_depth = std::min(point_depth(x), point_depth(y));
  const int zd = point_depth(z);
  if (zd >= pair_depth) throw PreconditionViolation("triangle_depth_count: need depth(z) < depth({x,y})");
  const auto& pts = h.points;
  const std::vector<Point> tri{pts[static_cast<Index>(x - 1)], pts[static_cast<Index>(y - 1)],
                               pts[static_cast<Index>(z - 1)]};
  const auto hull = convex_hull(tri);
  TriangleDepthCount result;
  result.r = pair_depth - zd;
  result.bound = (std::size_t{1} << (result.r - 1)) - 1;
  for (std::size_t lab = x + 1; lab < y; ++lab) {
    if (point_depth(lab) <= zd) continue;
    if (hull_contains(hull, pts[static_cast<Index>(lab - 1)], Boundary::Closed)) ++result.count;
  }
  return result;
}

int depth_gap_bound(std::size_t k, std::size_t l) {
  return static_cast<int>(std::bit_width(k - l + 1));
}

DepthGapReport depth_gap_scan(const IslandGraph& g, std::size_t k, std::size_t l) {
  if (l < 2) throw PreconditionViolation("depth_gap_scan: needs l >= 2");
  DepthGapReport r;
  r.vertices = g.vertex_count();
  r.bound = depth_gap_bound(k, l);
  std::vector<int> depth(g.vertex_count());
  for (std::size_t v = 0; v < depth.size(); ++v) depth[v] = island_depth(g.vertices[v]);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (int w : g.adjacency[u]) {
      if (static_cast<std::size_t>(w) < u) continue;
      ++r.edges;
      const int gap = std::abs(depth[u] - depth[static_cast<std::size_t>(w)]);
      r.max_gap = std::max(r.max_gap, gap);
      if (gap > r.bound) ++r.violations;
    }
  return r;
}

DepthGapReport depth_gap_scan(const HortonSet& h, std::size_t k, std::size_t l,
                              const ResourceCaps& caps) {
  if (l < 2) throw PreconditionViolation("depth_gap_scan: needs l >= 2");
  return depth_gap_scan(build_island_graph(h.points, k, l, caps), k, l);
}

LowerBoundReport lower_bound_experiment(const HortonSet& h, std::size_t k, std::size_t l,
                                        const ResourceCaps& caps) {
  if (l < 2 || l >= k || k - l < 2)
    throw PreconditionViolation("lower_bound_experiment: needs l >= 2 and k - l >= 2");
  const IslandGraph g = build_island_graph(h.points, k, l, caps);
  LowerBoundReport r;
  r.vertices = g.vertex_count();
  if (g.vertex_count() == 0) return r;
  const std::size_t n = h.size();

  std::vector<int> depth(g.vertex_count());
  int deep = 0;
  for (std::size_t v = 0; v < depth.size(); ++v) {
    depth[v] = island_depth(g.vertices[v]);
    if (depth[v] > depth[static_cast<std::size_t>(deep)]) deep = static_cast<int>(v);
  }
  r.max_depth = depth[static_cast<std::size_t>(deep)];
  r.deep = g.vertices[static_cast<std::size_t>(deep)];
  // ceil(log2(n/k)) and floor(log2(n/k)) + 1 in integer arithmetic.
  int ceil_log = 0;
  while ((k << ceil_log) < n) ++ceil_log;
  int floor_log = 0;
  while ((k << (floor_log + 1)) <= n) ++floor_log;
  r.predicted_max_depth = ceil_log;
  r.alternative_max_depth = floor_log + 1;
  r.depth_flag = std::abs(r.max_depth - r.predicted_max_depth) > 1;
  r.gap_bound = depth_gap_bound(k, l);
  r.certified_floor = (r.max_depth - 1 + r.gap_bound - 1) / r.gap_bound;

  const auto dist = bfs_distances(g, deep);
  for (std::size_t v = 0; v < depth.size(); ++v) {
    if (depth[v] != 1) continue;
    ++r.shallow_islands;
    if (dist[v] < 0) {
      ++r.unreachable_shallow;
      continue;
    }
    if (!r.distance || dist[v] < *r.distance) {
      r.distance = dist[v];
      r.shallow = g.vertices[v];
    }
  }
  r.holds = !r.distance || *r.distance >= r.certified_floor;
  return r;
}

}  // namespace ij
