#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "ij/graph.hpp"

namespace ij {

// A k-interval of the collinear model. Line points are numbered 1..n-1; the
// off-line apex is element 0. Without the apex the interval covers
// end-k+1..end; with it, the apex plus end-k+2..end. For k = 1 the apex-only
// island is encoded with end = 0.
struct IntervalIsland {
  int end = 0;
  bool has_apex = false;

  friend auto operator<=>(const IntervalIsland&, const IntervalIsland&) = default;
};

// S' (or S when with_apex is false): n counts every element including the
// apex, so |S| = n - 1.
struct LinearModel {
  int n = 0;
  int k = 0;
  int l = 0;
  bool with_apex = true;

  int line_points() const noexcept { return n - 1; }
  int step() const noexcept { return k - l; }

  bool valid(const IntervalIsland& v) const;
  // Every valid interval: apex-free ones first, each kind by increasing end.
  std::vector<IntervalIsland> intervals() const;
  // Members as abstract labels (apex = 0), ascending.
  Island members(const IntervalIsland& v) const;
  // Inverse of members(); nullopt if the set is not an interval of the model.
  std::optional<IntervalIsland> from_members(const Island& island) const;
};

std::size_t interval_intersection(const LinearModel& m, const IntervalIsland& a,
                                  const IntervalIsland& b);

// Exact-l graph with vertices labelled by members().
IslandGraph build_linear_graph(const LinearModel& m);

// The k-l residue paths of IJ(S, k, l), l > 0: entry r lists the intervals
// whose end is congruent to r modulo k-l, by increasing end.
std::vector<std::vector<IntervalIsland>> residue_decomposition(const LinearModel& m);

// Cross-type neighbours given by the grid lemma (l >= 2, apex model).
std::vector<IntervalIsland> grid_neighbors(const LinearModel& m, const IntervalIsland& v);

// (n >= 3k - 2l - 1) or n == k; defined for l >= 2.
bool connectivity_threshold(int n, int k, int l);

enum class MoveKind { Shrink, Grid, Residue, Halving, Bfs };

const char* to_string(MoveKind kind);

struct LinearPath {
  std::vector<IntervalIsland> vertices;
  std::vector<MoveKind> moves;  // moves[i] leads from vertices[i] to vertices[i+1]

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Constructive route: grid moves to reach the target's residue class and
// apex membership, then a walk along one residue path. For l < 2 a bounded
// bidirectional search of depth at most 4.
LinearPath linear_path(const LinearModel& m, const IntervalIsland& from, const IntervalIsland& to);

// Upper bound guaranteed for linear_path when l >= 2 and the model is connected.
int linear_path_bound(int n, int k, int l);

// Bijection between projectable k-islands of P and intervals of the apex
// model on n = |P| elements (apex p0, line points = radial positions).
IntervalIsland project_island(const PointSet& pts, const Island& island);
Island lift_interval(const PointSet& pts, const IntervalIsland& v, int k);

}  // namespace ij
