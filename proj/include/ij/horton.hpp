#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ij/graph.hpp"

namespace ij {

// Points x_1..x_n stored at indices 0..n-1 with x-coordinate i-1. The
// even-labelled half is lifted high above the odd-labelled half at every
// level of the recursion.
struct HortonSet {
  PointSet points;
  // lifts[level] lists, left to right, the offset added to the even copy of
  // every recursion node at that depth (nodes of size < 2 omitted).
  std::vector<std::vector<Coord>> lifts;

  std::size_t size() const noexcept { return points.size(); }
};

// Throws VerificationFailure if the generated set fails verify_horton and
// GenerationFailure if coordinates leave the 64-bit range.
HortonSet generate_horton(std::size_t n);

// No vertical pair inside either set, every line through two points of
// `upper` strictly above all of `lower` and vice versa.
bool is_high_above(std::span<const Point> upper, std::span<const Point> lower);

// Recursive even/odd validation by x-rank.
bool verify_horton(std::span<const Point> pts);
inline bool verify_horton(const HortonSet& h) { return verify_horton(h.points.points()); }

// Depth of label i (1-based): one plus the 2-adic valuation of i.
int point_depth(std::size_t label);
// Minimum depth over members (0-based indices, label = index + 1).
int island_depth(const Island& island);
// Depth from the definition: repeatedly keep the even positions while they
// still contain every label.
int depth_by_definition(std::span<const std::size_t> labels, std::size_t n);

struct TriangleDepthCount {
  std::size_t count = 0;
  std::size_t bound = 0;  // 2^(r-1) - 1
  int r = 0;
  bool holds() const noexcept { return count >= bound; }
};

// Points strictly between x and y in x-order, inside Conv{x,y,z}, deeper than
// z. Labels are 1-based; needs x < y and depth(z) < min(depth(x), depth(y)).
TriangleDepthCount triangle_depth_count(const HortonSet& h, std::size_t x, std::size_t y,
                                        std::size_t z);

// floor(log2(k-l+1)) + 1.
int depth_gap_bound(std::size_t k, std::size_t l);

struct DepthGapReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  int max_gap = 0;
  int bound = 0;
  std::size_t violations = 0;
};

DepthGapReport depth_gap_scan(const IslandGraph& g, std::size_t k, std::size_t l);
DepthGapReport depth_gap_scan(const HortonSet& h, std::size_t k, std::size_t l,
                              const ResourceCaps& caps = {});

struct LowerBoundReport {
  std::size_t vertices = 0;
  int max_depth = 0;
  int predicted_max_depth = 0;    // ceil(log2(n/k))
  int alternative_max_depth = 0;  // floor(log2(n/k)) + 1
  bool depth_flag = false;        // observed differs from predicted by more than one
  int gap_bound = 0;
  int certified_floor = 0;
  Island deep;
  Island shallow;                 // nearest depth-1 island
  std::optional<int> distance;    // BFS distance deep -> shallow
  std::size_t shallow_islands = 0;
  std::size_t unreachable_shallow = 0;
  bool holds = true;              // every reachable depth-1 island is >= floor away
};

LowerBoundReport lower_bound_experiment(const HortonSet& h, std::size_t k, std::size_t l,
                                        const ResourceCaps& caps = {});

}  // namespace ij
