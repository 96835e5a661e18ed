#include "ij/islands.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "ij/errors.hpp"

namespace ij {

Island::Island(std::vector<Index> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw ParameterError("island has repeated members");
}

bool Island::contains(Index i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::size_t intersection_size(const Island& a, const Island& b) {
  std::size_t count = 0;
  auto i = a.members.begin(), j = b.members.begin();
  while (i != a.members.end() && j != b.members.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

struct Box {
  Coord x0, x1, y0, y1;
  bool contains(const Point& p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
};

// Checks a subset with a reusable scratch buffer; `mask` flags members.
bool island_check(const PointSet& pts, std::span<const Index> subset, std::vector<char>& mask,
                  std::vector<Point>& scratch) {
  if (subset.size() <= 2 && pts.general_position()) return true;
  scratch.clear();
  Box box{pts[subset[0]].x, pts[subset[0]].x, pts[subset[0]].y, pts[subset[0]].y};
  for (Index i : subset) {
    const Point& p = pts[i];
    scratch.push_back(p);
    box.x0 = std::min(box.x0, p.x);
    box.x1 = std::max(box.x1, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.y1 = std::max(box.y1, p.y);
    mask[static_cast<std::size_t>(i)] = 1;
  }
  std::vector<Point> hull = convex_hull(scratch);
  bool ok = true;
  for (Index i = 0; i < static_cast<Index>(pts.size()) && ok; ++i) {
    if (mask[static_cast<std::size_t>(i)]) continue;
    const Point& p = pts[i];
    if (box.contains(p) && hull_contains(hull, p, Boundary::Closed)) ok = false;
  }
  for (Index i : subset) mask[static_cast<std::size_t>(i)] = 0;
  return ok;
}

}  // namespace

bool is_island(const PointSet& pts, std::span<const Index> subset) {
  if (subset.empty()) throw ParameterError("is_island: empty subset");
  for (Index i : subset)
    if (i < 0 || i >= static_cast<Index>(pts.size())) throw ParameterError("is_island: index out of range");
  std::vector<char> mask(pts.size(), 0);
  std::vector<Point> scratch;
  return island_check(pts, subset, mask, scratch);
}

IslandList enumerate_islands(const PointSet& pts, std::size_t k, const ResourceCaps& caps) {
  const int n = static_cast<int>(pts.size());
  if (k < 1 || static_cast<int>(k) > n) throw ParameterError("enumerate_islands: need 1 <= k <= |P|");
  pts.require_general_position();
  const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(n), k);
  if (subsets > caps.max_pairs) {
    std::ostringstream msg;
    msg << "enumerate_islands: C(" << n << "," << k << ") = " << subsets
        << " subset tests exceed cap " << caps.max_pairs;
    throw ResourceCapExceeded(msg.str());
  }

  const int kk = static_cast<int>(k);
  // Work item: all subsets with a fixed smallest element.
  auto scan_leading = [&](int first, std::vector<Island>& out) {
    std::vector<char> mask(pts.size(), 0);
    std::vector<Point> scratch;
    std::vector<Index> subset(k);
    subset[0] = first;
    for_each_subset(n - first - 1, kk - 1, [&](std::span<const Index> tail) {
      for (std::size_t i = 0; i < tail.size(); ++i) subset[i + 1] = tail[i] + first + 1;
      if (island_check(pts, subset, mask, scratch)) out.emplace_back(Island{subset});
    });
  };

  std::vector<std::vector<Island>> buckets(static_cast<std::size_t>(n - kk + 1));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (subsets < 20'000 || hw == 1) {
    for (int first = 0; first <= n - kk; ++first) scan_leading(first, buckets[static_cast<std::size_t>(first)]);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < hw; ++t) {
      workers.emplace_back([&] {
        for (int first = next++; first <= n - kk; first = next++)
          scan_leading(first, buckets[static_cast<std::size_t>(first)]);
      });
    }
  }
  IslandList list;
  list.k = k;
  for (auto& b : buckets) {
    list.islands.insert(list.islands.end(), std::make_move_iterator(b.begin()),
                        std::make_move_iterator(b.end()));
  }
  if (list.islands.size() > caps.max_vertices) {
    std::ostringstream msg;
    msg << "enumerate_islands: " << list.islands.size() << " islands exceed vertex cap "
        << caps.max_vertices;
    throw ResourceCapExceeded(msg.str());
  }
  return list;
}

std::size_t count_empty_triangles(const PointSet& pts) {
  if (pts.size() < 3) throw ParameterError("count_empty_triangles: need at least 3 points");
  pts.require_general_position();
  const std::size_t n = pts.size();
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Point& pa = pts[static_cast<Index>(a)];
        const Point& pb = pts[static_cast<Index>(b)];
        const Point& pc = pts[static_cast<Index>(c)];
        const Orientation turn = orientation(pa, pb, pc);
        bool empty = true;
        for (std::size_t d = 0; d < n && empty; ++d) {
          if (d == a || d == b || d == c) continue;
          const Point& p = pts[static_cast<Index>(d)];
          if (orientation(pa, pb, p) == turn && orientation(pb, pc, p) == turn &&
              orientation(pc, pa, p) == turn)
            empty = false;
        }
        if (empty) ++count;
      }
  return count;
}

namespace {

std::vector<int> line_positions(const PointSet& pts, const Island& island) {
  const Index apex = pts.apex();
  std::vector<int> pos;
  pos.reserve(island.k());
  for (Index i : island.members)
    if (i != apex) pos.push_back(pts.radial_position(i));
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

int island_weight(const PointSet& pts, const Island& island) {
  auto pos = line_positions(pts, island);
  if (pos.size() < 2) throw WeightUndefined("island_weight: fewer than two non-apex members");
  return pos.back() - pos.front();
}

bool is_projectable(const PointSet& pts, const Island& island) {
  auto pos = line_positions(pts, island);
  return pos.empty() || pos.back() - pos.front() + 1 == static_cast<int>(pos.size());
}

}  // namespace ij
