#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ij/interval_model.hpp"

namespace ij {

// (k-l)(k-l+1)+k: the size above which IJ(P,k,l) is connected.
std::size_t shrink_threshold(std::size_t k, std::size_t l);

// One maximal run of radial positions 1..n-1 holding exactly `a_points`
// members of A (l of them, or none when l = 0).
struct RadialInterval {
  int first = 0;  // radial positions, inclusive
  int last = 0;
  int a_points = 0;
  int other_points = 0;
  bool first_end = false;  // contains radial position 1
  bool last_end = false;   // contains radial position n-1
};

struct LIntervalCover {
  std::size_t l = 0;
  std::vector<RadialInterval> intervals;
};

LIntervalCover l_interval_cover(const PointSet& pts, const Island& island, std::size_t l);

// Recorded whenever a proof recipe had to be replaced by exhaustive search.
struct DivergenceEvent {
  std::string stage;   // "shrink" or "halving"
  std::string detail;
  Island at;
};

struct ConstructionLog {
  std::size_t recipe_retries = 0;  // first qualifying interval failed, a later one worked
  std::vector<DivergenceEvent> divergences;
};

// A neighbour of a non-projectable k-island that is projectable or lighter by
// at least k-l. Requires |P| > shrink_threshold(k, l).
Island shrink_step(const PointSet& pts, const Island& island, std::size_t l,
                   ConstructionLog* log = nullptr);

struct PathTrace {
  std::vector<Island> vertices;
  std::vector<MoveKind> moves;
  ConstructionLog log;
  int halving_rounds = 0;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

PathTrace shrink_to_projectable(const PointSet& pts, const Island& island, std::size_t l);

enum class ProjectableRoute { Constructive, Shortest };

PathTrace theorem1_path(const PointSet& pts, const Island& from, const Island& to, std::size_t l,
                        ProjectableRoute route = ProjectableRoute::Constructive);

// 2*ceil(n/(k-l)) + ceil((n-k)/(k-l)) + 2(k-l) + 6.
std::size_t theorem1_length_bound(std::size_t n, std::size_t k, std::size_t l);

struct HalvingResult {
  HalfplanePair cut;        // the ham-sandwich line of A and B
  Halfplane region;         // chosen closed side, possibly expanded
  std::size_t inside = 0;   // |region n P|
  Island from_next;         // neighbour of the first island inside region
  Island to_next;
  ConstructionLog log;
};

// Requires n >= 2 * shrink_threshold and 2l <= k. `min_points` (default the
// threshold) is the floor the region is expanded to.
HalvingResult halving_step(const PointSet& pts, const Island& from, const Island& to, std::size_t l,
                           std::optional<std::size_t> min_points = std::nullopt);

PathTrace log_path(const PointSet& pts, const Island& from, const Island& to, std::size_t l);

// ceil(log2(n / threshold)).
int halving_round_bound(std::size_t n, std::size_t k, std::size_t l);

struct PathValidation {
  bool ok = true;
  std::optional<std::size_t> failed_at;  // index of the first offending vertex
  std::string reason;
};

PathValidation validate_path(const PointSet& pts, const PathTrace& trace, std::size_t k, std::size_t l);

}  // namespace ij
