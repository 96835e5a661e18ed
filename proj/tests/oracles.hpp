#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "ij/geometry.hpp"
#include "ij/islands.hpp"

namespace oracle {

using ij::Index;
using ij::Point;

inline int sign(__int128 v) { return (v > 0) - (v < 0); }

inline int orient(const Point& p, const Point& q, const Point& r) {
  return sign(static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
              static_cast<__int128>(q.y - p.y) * (r.x - p.x));
}

inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
  const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  if (orient(a, b, c) == 0) return on_segment(a, b, p) || on_segment(b, c, p) || on_segment(a, c, p);
  return !(has_neg && has_pos);
}

// Caratheodory: p is in Conv(S) iff it lies in a triangle (or segment, or
// point) spanned by members of S.
inline bool in_hull(const std::vector<Point>& s, const Point& p) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == p) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (on_segment(s[i], s[j], p)) return true;
      for (std::size_t k = j + 1; k < n; ++k)
        if (in_closed_triangle(s[i], s[j], s[k], p)) return true;
    }
  }
  return false;
}

inline std::size_t count_inside(const ij::Halfplane& h, const std::vector<Point>& pts) {
  std::size_t c = 0;
  for (const Point& p : pts) c += static_cast<__int128>(h.a) * p.x + static_cast<__int128>(h.b) * p.y <= h.c;
  return c;
}

inline bool is_island(const std::vector<Point>& pts, const std::vector<Index>& subset) {
  std::vector<Point> s;
  for (Index i : subset) s.push_back(pts[static_cast<std::size_t>(i)]);
  for (std::size_t q = 0; q < pts.size(); ++q) {
    if (std::find(subset.begin(), subset.end(), static_cast<Index>(q)) != subset.end()) continue;
    if (in_hull(s, pts[q])) return false;
  }
  return true;
}

inline std::vector<std::vector<Index>> islands(const std::vector<Point>& pts, int k) {
  std::vector<std::vector<Index>> out;
  const int n = static_cast<int>(pts.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Index> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (is_island(pts, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Radial order by floating polar angle; adequate for small coordinates.
inline std::vector<Index> radial(const std::vector<Point>& pts) {
  std::size_t apex = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].y > pts[apex].y || (pts[i].y == pts[apex].y && pts[i].x > pts[apex].x)) apex = i;
  std::vector<Index> rest;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != apex) rest.push_back(static_cast<Index>(i));
  auto angle = [&](Index i) {
    const long double a = std::atan2(static_cast<long double>(pts[static_cast<std::size_t>(i)].y - pts[apex].y),
                                     static_cast<long double>(pts[static_cast<std::size_t>(i)].x - pts[apex].x));
    return a < 0 ? a + 2 * 3.14159265358979323846L : a;
  };
  std::sort(rest.begin(), rest.end(), [&](Index a, Index b) { return angle(a) < angle(b); });
  rest.insert(rest.begin(), static_cast<Index>(apex));
  return rest;
}

inline std::size_t common(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::set<Index> sa(a.begin(), a.end());
  std::size_t c = 0;
  for (Index v : b) c += sa.count(v);
  return c;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Diameter by Floyd-Warshall on an adjacency matrix; -1 if disconnected.
inline int diameter(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j : adj[i]) d[i][static_cast<std::size_t>(j)] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  int best = 0;
  for (auto& row : d)
    for (int v : row) {
      if (v >= inf) return -1;
      best = std::max(best, v);
    }
  return best;
}

// Horton depth by the literal definition: the chain H, H_0, H_00, ... of
// even-position subsets, returning how many of them contain every label.
inline int depth(const std::vector<std::size_t>& labels, std::size_t n) {
  std::vector<std::size_t> cur;
  for (std::size_t i = 1; i <= n; ++i) cur.push_back(i);
  int d = 0;
  while (!cur.empty()) {
    const bool all = std::all_of(labels.begin(), labels.end(), [&](std::size_t x) {
      return std::find(cur.begin(), cur.end(), x) != cur.end();
    });
    if (!all) break;
    ++d;
    std::vector<std::size_t> next;
    for (std::size_t i = 1; i < cur.size(); i += 2) next.push_back(cur[i]);
    cur = next;
  }
  return d;
}

}  // namespace oracle
