#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ij/geometry.hpp"

namespace ij {

// A subset of point indices, strictly increasing.
struct Island {
  std::vector<Index> members;

  Island() = default;
  explicit Island(std::vector<Index> m);

  std::size_t k() const noexcept { return members.size(); }
  bool contains(Index i) const;

  friend auto operator<=>(const Island&, const Island&) = default;
  friend bool operator==(const Island&, const Island&) = default;
};

std::size_t intersection_size(const Island& a, const Island& b);

struct IslandList {
  std::vector<Island> islands;
  std::size_t k = 0;
};

// Limits on enumeration and graph construction; exceeding one is a refusal,
// never a truncation.
struct ResourceCaps {
  std::size_t max_vertices = 5'000'000;
  std::size_t max_pairs = 500'000'000;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Calls visit(span of k indices) for every k-subset of {0..n-1} in
// lexicographic order.
template <class Visitor>
void for_each_subset(int n, int k, Visitor&& visit) {
  if (k < 0 || k > n) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(std::span<const Index>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// No point of P outside S lies in the closed hull of S.
bool is_island(const PointSet& pts, std::span<const Index> subset);
inline bool is_island(const PointSet& pts, const Island& s) { return is_island(pts, s.members); }

// All k-islands in lexicographic order. Large inputs are split across threads
// by leading index; the merge is schedule independent.
IslandList enumerate_islands(const PointSet& pts, std::size_t k, const ResourceCaps& caps = {});

// Triples with no point of P strictly inside their triangle, from a direct
// triple scan.
std::size_t count_empty_triangles(const PointSet& pts);

// Spread of radial positions over the members other than the apex.
int island_weight(const PointSet& pts, const Island& island);

// Members other than the apex occupy consecutive radial positions.
bool is_projectable(const PointSet& pts, const Island& island);

}  // namespace ij
