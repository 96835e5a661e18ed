#include "ij/interval_model.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ij/errors.hpp"

namespace ij {

bool LinearModel::valid(const IntervalIsland& v) const {
  if (v.has_apex) {
    if (!with_apex) return false;
    if (k == 1) return v.end == 0;
    return v.end >= k - 1 && v.end <= n - 1;
  }
  return v.end >= k && v.end <= n - 1;
}

std::vector<IntervalIsland> LinearModel::intervals() const {
  std::vector<IntervalIsland> out;
  for (int e = k; e <= n - 1; ++e) out.push_back({e, false});
  if (with_apex) {
    if (k == 1) {
      out.push_back({0, true});
    } else {
      for (int e = k - 1; e <= n - 1; ++e) out.push_back({e, true});
    }
  }
  return out;
}

namespace {

// First covered line point; the range is [first, end].
int first_line_point(const LinearModel& m, const IntervalIsland& v) {
  return v.has_apex ? v.end - m.k + 2 : v.end - m.k + 1;
}

int mod(int a, int d) { return ((a % d) + d) % d; }

void check_params(const LinearModel& m) {
  if (m.l < 0 || m.l >= m.k) throw ParameterError("linear model: need 0 <= l < k");
  if (m.n < m.k) throw ParameterError("linear model: need n >= k");
}

}  // namespace

Island LinearModel::members(const IntervalIsland& v) const {
  Island island;
  if (v.has_apex) island.members.push_back(0);
  for (int p = first_line_point(*this, v); p <= v.end; ++p) island.members.push_back(p);
  return island;
}

std::optional<IntervalIsland> LinearModel::from_members(const Island& island) const {
  if (static_cast<int>(island.k()) != k) return std::nullopt;
  const bool apex = !island.members.empty() && island.members.front() == 0;
  const std::size_t first = apex ? 1 : 0;
  for (std::size_t i = first + 1; i < island.members.size(); ++i)
    if (island.members[i] != island.members[i - 1] + 1) return std::nullopt;
  IntervalIsland v{first < island.members.size() ? island.members.back() : 0, apex};
  if (!valid(v)) return std::nullopt;
  return v;
}

std::size_t interval_intersection(const LinearModel& m, const IntervalIsland& a,
                                  const IntervalIsland& b) {
  const int lo = std::max(first_line_point(m, a), first_line_point(m, b));
  const int hi = std::min(a.end, b.end);
  std::size_t shared = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  if (a.has_apex && b.has_apex) ++shared;
  return shared;
}

IslandGraph build_linear_graph(const LinearModel& m) {
  check_params(m);
  std::vector<Island> vertices;
  for (const auto& v : m.intervals()) vertices.push_back(m.members(v));
  std::sort(vertices.begin(), vertices.end());
  return build_exact_intersection_graph(std::move(vertices), static_cast<std::size_t>(m.k),
                                        static_cast<std::size_t>(m.l), {}, EdgeStrategy::Pairwise);
}

std::vector<std::vector<IntervalIsland>> residue_decomposition(const LinearModel& m) {
  check_params(m);
  if (m.l == 0) throw ParameterError("residue_decomposition: needs l > 0");
  if (m.with_apex) throw ParameterError("residue_decomposition: defined on the apex-free model");
  const int d = m.step();
  std::vector<std::vector<IntervalIsland>> paths(static_cast<std::size_t>(d));
  for (const auto& v : m.intervals()) paths[static_cast<std::size_t>(mod(v.end, d))].push_back(v);
  return paths;
}

std::vector<IntervalIsland> grid_neighbors(const LinearModel& m, const IntervalIsland& v) {
  check_params(m);
  if (m.l < 2) throw ParameterError("grid_neighbors: needs l >= 2");
  if (!m.with_apex) throw ParameterError("grid_neighbors: needs the apex model");
  if (!m.valid(v)) throw ParameterError("grid_neighbors: invalid interval");
  const int d = m.step();
  std::array<IntervalIsland, 2> cand = v.has_apex
      ? std::array<IntervalIsland, 2>{IntervalIsland{v.end + d, false}, IntervalIsland{v.end - d + 1, false}}
      : std::array<IntervalIsland, 2>{IntervalIsland{v.end - d, true}, IntervalIsland{v.end + d - 1, true}};
  std::vector<IntervalIsland> out;
  for (const auto& c : cand)
    if (m.valid(c)) out.push_back(c);
  return out;
}

bool connectivity_threshold(int n, int k, int l) {
  if (l < 2) throw ParameterError("connectivity_threshold: defined for l >= 2");
  if (l >= k) throw ParameterError("connectivity_threshold: need l < k");
  return n >= 3 * k - 2 * l - 1 || n == k;
}

int linear_path_bound(int n, int k, int l) {
  const int d = k - l;
  return 2 * d + (std::max(n - k, 0) + d - 1) / d + 4;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Shrink: return "shrink";
    case MoveKind::Grid: return "grid";
    case MoveKind::Residue: return "residue";
    case MoveKind::Halving: return "halving";
    case MoveKind::Bfs: return "bfs";
  }
  return "unknown";
}

namespace {

void push(LinearPath& path, const IntervalIsland& v, MoveKind kind) {
  path.moves.push_back(kind);
  path.vertices.push_back(v);
}

// Walk along the residue path of `at` (same kind as `to`, same residue).
void residue_walk(const LinearModel& m, LinearPath& path, const IntervalIsland& to) {
  const int d = m.step();
  IntervalIsland at = path.vertices.back();
  while (at.end != to.end) {
    at.end += at.end < to.end ? d : -d;
    push(path, at, MoveKind::Residue);
  }
}

// Position on the 2(k-l)-cycle of (kind, residue) classes: grid moves shift
// it by one, residue moves keep it.
int cycle_position(const LinearModel& m, const IntervalIsland& v) {
  return 2 * mod(v.end, m.step()) + (v.has_apex ? 1 : 0);
}

std::optional<LinearPath> grid_route(const LinearModel& m, const IntervalIsland& from,
                                     const IntervalIsland& to, int direction) {
  const int d = m.step();
  const int cycle = 2 * d;
  LinearPath path;
  path.vertices.push_back(from);
  IntervalIsland at = from;
  const int target = cycle_position(m, to);
  for (int guard = 0; cycle_position(m, at) != target; ++guard) {
    if (guard > 4 * d + 4) return std::nullopt;
    IntervalIsland cross;
    if (direction > 0) {
      cross = at.has_apex ? IntervalIsland{at.end - d + 1, false} : IntervalIsland{at.end - d, true};
    } else {
      cross = at.has_apex ? IntervalIsland{at.end + d, false} : IntervalIsland{at.end + d - 1, true};
    }
    if (m.valid(cross)) {
      at = cross;
      push(path, at, MoveKind::Grid);
      continue;
    }
    IntervalIsland shift{at.end + (direction > 0 ? d : -d), at.has_apex};
    if (!m.valid(shift)) return std::nullopt;
    at = shift;
    push(path, at, MoveKind::Residue);
  }
  (void)cycle;
  residue_walk(m, path, to);
  return path;
}

LinearPath bounded_search(const LinearModel& m, const IntervalIsland& from, const IntervalIsland& to) {
  IslandGraph g = build_linear_graph(m);
  const int s = g.find(m.members(from));
  const int t = g.find(m.members(to));
  auto dist_s = bfs_distances(g, s);
  auto dist_t = bfs_distances(g, t);
  int meet = -1;
  int best = 5;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    const int a = dist_s[static_cast<std::size_t>(v)], b = dist_t[static_cast<std::size_t>(v)];
    if (a < 0 || b < 0 || a > 2 || b > 2) continue;
    if (a + b < best) {
      best = a + b;
      meet = v;
    }
  }
  if (meet < 0) throw Unreachable("linear_path: no route of at most 4 hops");
  auto first = shortest_path(g, s, meet);
  auto second = shortest_path(g, meet, t);
  LinearPath path;
  path.vertices.push_back(from);
  auto append = [&](const std::vector<int>& ids) {
    for (std::size_t i = 1; i < ids.size(); ++i)
      push(path, *m.from_members(g.vertices[static_cast<std::size_t>(ids[i])]), MoveKind::Grid);
  };
  append(first);
  append(second);
  return path;
}

}  // namespace

LinearPath linear_path(const LinearModel& m, const IntervalIsland& from, const IntervalIsland& to) {
  check_params(m);
  if (!m.valid(from) || !m.valid(to)) throw ParameterError("linear_path: invalid interval");
  LinearPath path;
  path.vertices.push_back(from);
  if (from == to) return path;
  const int d = m.step();

  if (!m.with_apex && m.l >= 1) {
    if (mod(from.end, d) != mod(to.end, d))
      throw Unreachable("linear_path: intervals lie on different residue paths");
    residue_walk(m, path, to);
    return path;
  }
  if (m.with_apex && m.l >= 2) {
    if (!connectivity_threshold(m.n, m.k, m.l)) {
      std::ostringstream msg;
      msg << "linear_path: n = " << m.n << " below 3k-2l-1 = " << 3 * m.k - 2 * m.l - 1;
      throw Unreachable(msg.str());
    }
    auto down = grid_route(m, from, to, +1);
    auto up = grid_route(m, from, to, -1);
    if (!down && !up) throw Unreachable("linear_path: grid construction failed");
    if (!up || (down && down->length() <= up->length())) return *down;
    return *up;
  }
  return bounded_search(m, from, to);
}

IntervalIsland project_island(const PointSet& pts, const Island& island) {
  if (!is_projectable(pts, island)) throw NotProjectable("project_island: island is not projectable");
  const Index apex = pts.apex();
  IntervalIsland v{0, false};
  for (Index i : island.members) {
    if (i == apex) {
      v.has_apex = true;
    } else {
      v.end = std::max(v.end, pts.radial_position(i));
    }
  }
  return v;
}

Island lift_interval(const PointSet& pts, const IntervalIsland& v, int k) {
  LinearModel m{static_cast<int>(pts.size()), k, 0, true};
  if (k < 1 || !m.valid(v)) throw ParameterError("lift_interval: interval not valid for this point set");
  std::vector<Index> members;
  for (Index label : m.members(v).members) members.push_back(pts.at_radial(label));
  return Island(std::move(members));
}

}  // namespace ij
