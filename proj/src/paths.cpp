#include "ij/paths.hpp"

#include <algorithm>
#include <sstream>

#include "ij/errors.hpp"

namespace ij {

std::size_t shrink_threshold(std::size_t k, std::size_t l) {
  const std::size_t d = k - l;
  return d * (d + 1) + k;
}

std::size_t theorem1_length_bound(std::size_t n, std::size_t k, std::size_t l) {
  const std::size_t d = k - l;
  auto ceil_div = [](std::size_t a, std::size_t b) { return (a + b - 1) / b; };
  return 2 * ceil_div(n, d) + ceil_div(n - std::min(n, k), d) + 2 * d + 6;
}

int halving_round_bound(std::size_t n, std::size_t k, std::size_t l) {
  const std::size_t thr = shrink_threshold(k, l);
  int r = 0;
  for (std::size_t cap = thr; cap < n; cap *= 2) ++r;
  return r;
}

namespace {

std::string describe(const Island& island) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < island.members.size(); ++i) out << (i ? "," : "") << island.members[i];
  out << '}';
  return out.str();
}

std::vector<int> line_positions(const PointSet& pts, const Island& island) {
  std::vector<int> pos;
  const Index apex = pts.apex();
  for (Index i : island.members)
    if (i != apex) pos.push_back(pts.radial_position(i));
  std::sort(pos.begin(), pos.end());
  return pos;
}

std::vector<Point> coords(const PointSet& pts, std::span<const Index> idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (Index i : idx) out.push_back(pts[i]);
  return out;
}

// J plus the `fill` candidates closest to Conv(J); `others` must arrive in
// tie-break order.
std::optional<Island> nearest_fill(const PointSet& pts, std::vector<Index> core,
                                   std::vector<Index> others, std::size_t fill) {
  if (others.size() < fill) return std::nullopt;
  auto hull = convex_hull(coords(pts, core));
  std::stable_sort(others.begin(), others.end(), [&](Index p, Index q) {
    return compare_distance_to_hull(hull, pts[p], pts[q]) < 0;
  });
  core.insert(core.end(), others.begin(), others.begin() + static_cast<std::ptrdiff_t>(fill));
  return Island(std::move(core));
}

Island from_radial_window(const PointSet& pts, int first, int count) {
  std::vector<Index> members;
  for (int p = first; p < first + count; ++p) members.push_back(pts.at_radial(p));
  return Island(std::move(members));
}

template <class Accept>
std::optional<Island> exhaustive_neighbour(std::span<const Index> core_pool,
                                           std::span<const Index> fill_pool, std::size_t l,
                                           std::size_t fill, Accept&& accept) {
  std::optional<Island> found;
  for_each_subset(static_cast<int>(core_pool.size()), static_cast<int>(l), [&](std::span<const Index> t) {
    if (found) return;
    for_each_subset(static_cast<int>(fill_pool.size()), static_cast<int>(fill), [&](std::span<const Index> u) {
      if (found) return;
      std::vector<Index> members;
      for (Index i : t) members.push_back(core_pool[static_cast<std::size_t>(i)]);
      for (Index i : u) members.push_back(fill_pool[static_cast<std::size_t>(i)]);
      Island candidate(std::move(members));
      if (accept(candidate)) found = std::move(candidate);
    });
  });
  return found;
}

}  // namespace

LIntervalCover l_interval_cover(const PointSet& pts, const Island& island, std::size_t l) {
  const int n = static_cast<int>(pts.size());
  const auto pos = line_positions(pts, island);
  const int m = static_cast<int>(pos.size());
  const int li = static_cast<int>(l);
  LIntervalCover cover;
  cover.l = l;
  auto add = [&](int lo, int hi, int a, bool first_end, bool last_end) {
    cover.intervals.push_back({lo, hi, a, (hi - lo + 1) - a, first_end, last_end});
  };
  if (l == 0) {
    for (int t = 0; t <= m; ++t) {
      const int lo = t == 0 ? 1 : pos[static_cast<std::size_t>(t - 1)] + 1;
      const int hi = t == m ? n - 1 : pos[static_cast<std::size_t>(t)] - 1;
      if (lo <= hi) add(lo, hi, 0, lo == 1, hi == n - 1);
    }
    return cover;
  }
  for (int t = 0; t + li <= m; ++t) {
    const int lo = t == 0 ? 1 : pos[static_cast<std::size_t>(t - 1)] + 1;
    const int hi = t + li == m ? n - 1 : pos[static_cast<std::size_t>(t + li)] - 1;
    add(lo, hi, li, t == 0, t + li == m);
  }
  return cover;
}

Island shrink_step(const PointSet& pts, const Island& island, std::size_t l, ConstructionLog* log) {
  const std::size_t k = island.k();
  const std::size_t n = pts.size();
  if (l >= k) throw ParameterError("shrink_step: need l < k");
  pts.require_general_position();
  if (n <= shrink_threshold(k, l)) {
    std::ostringstream msg;
    msg << "shrink_step: need n > (k-l)(k-l+1)+k = " << shrink_threshold(k, l) << ", got n = " << n;
    throw PreconditionViolation(msg.str());
  }
  if (!is_island(pts, island)) throw NotAnIsland("shrink_step: " + describe(island) + " is not an island");
  if (is_projectable(pts, island)) throw PreconditionViolation("shrink_step: island is already projectable");

  const std::size_t d = k - l;
  const int weight = island_weight(pts, island);
  auto accept = [&](const Island& c) {
    if (c.k() != k || intersection_size(c, island) != l || !is_island(pts, c)) return false;
    return is_projectable(pts, c) || island_weight(pts, c) + static_cast<int>(d) <= weight;
  };

  const Index apex = pts.apex();
  auto a_positions_in = [&](int lo, int hi) {
    std::vector<Index> core;
    for (int p = lo; p <= hi; ++p)
      if (island.contains(pts.at_radial(p))) core.push_back(pts.at_radial(p));
    return core;
  };
  auto others_in = [&](int lo, int hi) {
    std::vector<Index> rest;
    for (int p = lo; p <= hi; ++p)
      if (!island.contains(pts.at_radial(p))) rest.push_back(pts.at_radial(p));
    return rest;
  };

  auto recipe = [&](const RadialInterval& iv) -> std::optional<Island> {
    const int kk = static_cast<int>(k);
    if (l == 0) {
      if (iv.last - iv.first + 1 < kk) return std::nullopt;
      return from_radial_window(pts, iv.first, kk);
    }
    if (!iv.first_end && !iv.last_end) {
      return nearest_fill(pts, a_positions_in(iv.first, iv.last), others_in(iv.first, iv.last), d);
    }
    const auto core = a_positions_in(iv.first, iv.last);
    const int ps = pts.radial_position(core.front());
    int pe = ps;
    for (Index i : core) pe = std::max(pe, pts.radial_position(i));
    const int inner = (pe - ps + 1) - static_cast<int>(l);
    if (inner >= static_cast<int>(d)) return nearest_fill(pts, core, others_in(ps, pe), d);
    // Extend [p_S, p_E] by the missing points outward; when that side runs
    // short, shift the k-window inside the interval.
    const int need = static_cast<int>(d) - inner;
    int start = iv.first_end ? ps - need : ps;
    const int lo = std::max(iv.first, pe - kk + 1);
    const int hi = std::min(ps, iv.last - kk + 1);
    if (lo > hi) return std::nullopt;
    start = std::clamp(start, lo, hi);
    return from_radial_window(pts, start, kk);
  };

  std::size_t failed = 0;
  for (const auto& iv : l_interval_cover(pts, island, l).intervals) {
    if (iv.other_points < static_cast<int>(d)) continue;
    auto candidate = recipe(iv);
    if (candidate && accept(*candidate)) {
      if (failed > 0 && log) ++log->recipe_retries;
      return *candidate;
    }
    ++failed;
  }

  std::vector<Index> rest;
  for (Index i = 0; i < static_cast<Index>(n); ++i)
    if (!island.contains(i)) rest.push_back(i);
  auto found = exhaustive_neighbour(island.members, rest, l, d, accept);
  if (!found) {
    throw VerificationFailure("shrink_step: no neighbour of " + describe(island) +
                              " is projectable or lighter by k-l");
  }
  if (log) {
    std::ostringstream msg;
    msg << failed << " interval recipe(s) rejected; exhaustive search chose " << describe(*found);
    log->divergences.push_back({"shrink", msg.str(), island});
  }
  (void)apex;
  return *found;
}

PathTrace shrink_to_projectable(const PointSet& pts, const Island& island, std::size_t l) {
  PathTrace trace;
  trace.vertices.push_back(island);
  const std::size_t k = island.k();
  const std::size_t d = k - l;
  const std::size_t limit = (pts.size() + d - 1) / d + 1;
  while (!is_projectable(pts, trace.vertices.back())) {
    if (trace.length() >= limit) throw VerificationFailure("shrink_to_projectable: step limit exceeded");
    trace.vertices.push_back(shrink_step(pts, trace.vertices.back(), l, &trace.log));
    trace.moves.push_back(MoveKind::Shrink);
  }
  return trace;
}

namespace {

void merge_log(ConstructionLog& into, const ConstructionLog& from) {
  into.recipe_retries += from.recipe_retries;
  into.divergences.insert(into.divergences.end(), from.divergences.begin(), from.divergences.end());
}

}  // namespace

PathTrace theorem1_path(const PointSet& pts, const Island& from, const Island& to, std::size_t l,
                        ProjectableRoute route) {
  const std::size_t k = from.k();
  const std::size_t n = pts.size();
  if (to.k() != k) throw ParameterError("theorem1_path: islands differ in size");
  if (l >= k) throw ParameterError("theorem1_path: need l < k");
  if (n <= shrink_threshold(k, l)) {
    std::ostringstream msg;
    msg << "theorem1_path: need n > (k-l)(k-l+1)+k = " << shrink_threshold(k, l) << ", got n = " << n;
    throw PreconditionViolation(msg.str());
  }
  pts.require_general_position();
  if (!is_island(pts, from)) throw NotAnIsland("theorem1_path: " + describe(from) + " is not an island");
  if (!is_island(pts, to)) throw NotAnIsland("theorem1_path: " + describe(to) + " is not an island");

  PathTrace trace;
  if (from == to) {
    trace.vertices.push_back(from);
    return trace;
  }
  PathTrace head = shrink_to_projectable(pts, from, l);
  PathTrace tail = shrink_to_projectable(pts, to, l);

  LinearModel model{static_cast<int>(n), static_cast<int>(k), static_cast<int>(l), true};
  const IntervalIsland start = project_island(pts, head.vertices.back());
  const IntervalIsland goal = project_island(pts, tail.vertices.back());
  LinearPath middle;
  if (route == ProjectableRoute::Constructive) {
    middle = linear_path(model, start, goal);
  } else {
    IslandGraph g = build_linear_graph(model);
    auto ids = shortest_path(g, g.find(model.members(start)), g.find(model.members(goal)));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      middle.vertices.push_back(*model.from_members(g.vertices[static_cast<std::size_t>(ids[i])]));
      if (i > 0) middle.moves.push_back(MoveKind::Bfs);
    }
  }

  trace = std::move(head);
  for (std::size_t i = 1; i < middle.vertices.size(); ++i) {
    trace.vertices.push_back(lift_interval(pts, middle.vertices[i], static_cast<int>(k)));
    trace.moves.push_back(middle.moves[i - 1]);
  }
  for (std::size_t i = tail.vertices.size() - 1; i-- > 0;) {
    trace.vertices.push_back(tail.vertices[i]);
    trace.moves.push_back(MoveKind::Shrink);
  }
  merge_log(trace.log, tail.log);
  return trace;
}

namespace {

// Neighbour of `island` inside `region`, built over the points of the region
// ordered by distance to its boundary.
Island halving_neighbour(const PointSet& pts, const Halfplane& region, const Island& island,
                         std::size_t l, ConstructionLog& log) {
  const std::size_t k = island.k();
  const std::size_t d = k - l;
  std::vector<Index> inside;
  for (Index i = 0; i < static_cast<Index>(pts.size()); ++i)
    if (region.contains(pts[i])) inside.push_back(i);
  auto secondary = [&](Index i) { return Wide{-region.b} * pts[i].x + Wide{region.a} * pts[i].y; };
  std::sort(inside.begin(), inside.end(), [&](Index p, Index q) {
    const Wide vp = region.value(pts[p]), vq = region.value(pts[q]);
    if (vp != vq) return vp > vq;  // larger value = closer to the boundary
    return secondary(p) < secondary(q);
  });

  auto accept = [&](const Island& c) {
    if (c.k() != k || intersection_size(c, island) != l) return false;
    for (Index i : c.members)
      if (!region.contains(pts[i])) return false;
    return is_island(pts, c);
  };

  std::vector<int> a_slots;
  for (std::size_t s = 0; s < inside.size(); ++s)
    if (island.contains(inside[s])) a_slots.push_back(static_cast<int>(s));
  const int q = static_cast<int>(inside.size());
  const int h = static_cast<int>(a_slots.size());
  const int li = static_cast<int>(l);

  std::vector<std::pair<int, int>> runs;
  if (l == 0) {
    for (int t = 0; t <= h; ++t) {
      const int lo = t == 0 ? 0 : a_slots[static_cast<std::size_t>(t - 1)] + 1;
      const int hi = t == h ? q - 1 : a_slots[static_cast<std::size_t>(t)] - 1;
      if (lo <= hi) runs.emplace_back(lo, hi);
    }
  } else {
    for (int t = 0; t + li <= h; ++t) {
      const int lo = t == 0 ? 0 : a_slots[static_cast<std::size_t>(t - 1)] + 1;
      const int hi = t + li == h ? q - 1 : a_slots[static_cast<std::size_t>(t + li)] - 1;
      runs.emplace_back(lo, hi);
    }
  }

  std::size_t failed = 0;
  for (const auto& [lo, hi] : runs) {
    std::vector<Index> core, others;
    for (int s = lo; s <= hi; ++s)
      (island.contains(inside[static_cast<std::size_t>(s)]) ? core : others).push_back(inside[static_cast<std::size_t>(s)]);
    if (others.size() < d) continue;
    std::optional<Island> candidate;
    if (l == 0) {
      candidate = Island(std::vector<Index>(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k)));
    } else {
      candidate = nearest_fill(pts, core, others, d);
    }
    if (candidate && accept(*candidate)) {
      if (failed > 0) ++log.recipe_retries;
      return *candidate;
    }
    ++failed;
  }

  std::vector<Index> core_pool, fill_pool;
  for (Index i : inside) (island.contains(i) ? core_pool : fill_pool).push_back(i);
  std::sort(core_pool.begin(), core_pool.end());
  std::sort(fill_pool.begin(), fill_pool.end());
  auto found = exhaustive_neighbour(core_pool, fill_pool, l, d, accept);
  if (!found) throw VerificationFailure("halving_step: no neighbour of " + describe(island) + " inside the halfplane");
  std::ostringstream msg;
  msg << failed << " slab recipe(s) rejected; exhaustive search chose " << describe(*found);
  log.divergences.push_back({"halving", msg.str(), island});
  return *found;
}

}  // namespace

HalvingResult halving_step(const PointSet& pts, const Island& from, const Island& to, std::size_t l,
                           std::optional<std::size_t> min_points) {
  const std::size_t k = from.k();
  const std::size_t n = pts.size();
  if (to.k() != k) throw ParameterError("halving_step: islands differ in size");
  if (l >= k) throw ParameterError("halving_step: need l < k");
  const std::size_t thr = shrink_threshold(k, l);
  if (n < 2 * thr) {
    std::ostringstream msg;
    msg << "halving_step: need n >= 2((k-l)(k-l+1)+k) = " << 2 * thr << ", got n = " << n;
    throw PreconditionViolation(msg.str());
  }
  if (2 * l > k) throw PreconditionViolation("halving_step: need l <= k/2");
  const std::size_t floor_points = min_points.value_or(thr);
  if (floor_points > n / 2) throw ParameterError("halving_step: min_points exceeds n/2");
  pts.require_general_position();

  const auto a_pts = coords(pts, from.members);
  const auto b_pts = coords(pts, to.members);
  const std::size_t need = (k + 1) / 2;
  const auto all = pts.points();

  HalvingResult result;
  // A closed side of `cut`, with on-line points kept or dropped, holding
  // enough of A and B and at most n/2 of P.
  auto pick = [&](const HalfplanePair& cut) {
    for (const Halfplane& side : {cut.first, cut.second}) {
      std::vector<Point> on_line;
      for (const Point& p : all)
        if (side.on_boundary(p)) on_line.push_back(p);
      std::vector<std::vector<Point>> keeps{on_line};
      if (on_line.size() == 2) {
        keeps.push_back({on_line[0]});
        keeps.push_back({on_line[1]});
      }
      if (!on_line.empty()) keeps.push_back({});
      for (const auto& keep : keeps) {
        const Halfplane h = boundary_variant(side, all, keep);
        if (count_inside(h, a_pts) >= need && count_inside(h, b_pts) >= need &&
            count_inside(h, all) <= n / 2) {
          result.cut = cut;
          result.region = h;
          return true;
        }
      }
    }
    return false;
  };
  auto through = [&](std::size_t i, std::size_t j) {
    const Halfplane h = halfplane_through(all[i], all[j]);
    return HalfplanePair{h, h.opposite()};
  };

  bool chosen = false;
  for (const auto& cut : ham_sandwich_candidates(a_pts, b_pts))
    if ((chosen = pick(cut))) break;
  // Cuts through points of P outside A u B.
  for (std::size_t i = 0; i < n && !chosen; ++i)
    for (std::size_t j = i + 1; j < n && !chosen; ++j) {
      const HalfplanePair cut = through(i, j);
      if (is_ham_sandwich_cut(cut, a_pts, b_pts)) chosen = pick(cut);
    }
  // Every partition of P by a line is a boundary variant of a line through
  // two of its points, so this search is exhaustive.
  for (std::size_t i = 0; i < n && !chosen; ++i)
    for (std::size_t j = i + 1; j < n && !chosen; ++j)
      if ((chosen = pick(through(i, j)))) {
        result.cut = {result.region, result.region.opposite()};
        result.log.divergences.push_back(
            {"halving", "no ham-sandwich side holds at most n/2 points; used a non-bisecting halfplane", from});
      }
  if (!chosen) throw VerificationFailure("halving_step: no halfplane holds enough of A and B and at most n/2 points");

  if (count_inside(result.region, all) < floor_points) {
    Halfplane grown = expand_halfplane(result.region, all, floor_points);
    if (count_inside(grown, all) > n / 2) grown = perturbed_level(result.region, all, floor_points);
    result.region = grown;
  }
  result.inside = count_inside(result.region, all);
  result.from_next = halving_neighbour(pts, result.region, from, l, result.log);
  result.to_next = halving_neighbour(pts, result.region, to, l, result.log);
  return result;
}

PathTrace log_path(const PointSet& pts, const Island& from, const Island& to, std::size_t l) {
  const std::size_t k = from.k();
  if (to.k() != k) throw ParameterError("log_path: islands differ in size");
  if (l >= k) throw ParameterError("log_path: need l < k");
  if (2 * l > k) throw PreconditionViolation("log_path: need l <= k/2");
  const std::size_t thr = shrink_threshold(k, l);

  PathTrace trace;
  if (from == to) {
    trace.vertices.push_back(from);
    return trace;
  }

  std::vector<Index> alive(pts.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<Index>(i);
  PointSet current = pts;
  Island a = from, b = to;  // local to `current`
  std::vector<Island> head{from}, tail{to};
  auto to_global = [&](const Island& local) {
    std::vector<Index> members;
    for (Index i : local.members) members.push_back(alive[static_cast<std::size_t>(i)]);
    return Island(std::move(members));
  };

  // Stop one point early so the surviving set stays strictly above the
  // connectivity threshold.
  while (alive.size() >= 2 * thr + 2) {
    HalvingResult step = halving_step(current, a, b, l, thr + 1);
    merge_log(trace.log, step.log);
    head.push_back(to_global(step.from_next));
    tail.push_back(to_global(step.to_next));

    std::vector<Index> local_keep;
    std::vector<int> remap(current.size(), -1);
    for (Index i = 0; i < static_cast<Index>(current.size()); ++i) {
      if (step.region.contains(current[i])) {
        remap[static_cast<std::size_t>(i)] = static_cast<int>(local_keep.size());
        local_keep.push_back(i);
      }
    }
    auto relabel = [&](const Island& island) {
      std::vector<Index> members;
      for (Index i : island.members) members.push_back(remap[static_cast<std::size_t>(i)]);
      return Island(std::move(members));
    };
    a = relabel(step.from_next);
    b = relabel(step.to_next);
    std::vector<Index> next_alive;
    for (Index i : local_keep) next_alive.push_back(alive[static_cast<std::size_t>(i)]);
    current = current.subset(local_keep);
    alive = std::move(next_alive);
    ++trace.halving_rounds;
  }

  PathTrace inner = theorem1_path(current, a, b, l);
  merge_log(trace.log, inner.log);
  trace.vertices = head;
  trace.moves.assign(head.size() - 1, MoveKind::Halving);
  for (std::size_t i = 1; i < inner.vertices.size(); ++i) {
    trace.vertices.push_back(to_global(inner.vertices[i]));
    trace.moves.push_back(inner.moves[i - 1]);
  }
  for (std::size_t i = tail.size() - 1; i-- > 0;) {
    trace.vertices.push_back(tail[i]);
    trace.moves.push_back(MoveKind::Halving);
  }
  return trace;
}

PathValidation validate_path(const PointSet& pts, const PathTrace& trace, std::size_t k, std::size_t l) {
  PathValidation v;
  auto fail = [&](std::size_t at, std::string why) {
    v.ok = false;
    v.failed_at = at;
    v.reason = std::move(why);
    return v;
  };
  if (trace.vertices.empty()) return fail(0, "empty trace");
  if (trace.moves.size() + 1 != trace.vertices.size()) return fail(0, "move tags do not match steps");
  for (std::size_t i = 0; i < trace.vertices.size(); ++i) {
    const Island& island = trace.vertices[i];
    if (island.k() != k) return fail(i, "vertex has the wrong cardinality");
    for (Index m : island.members)
      if (m < 0 || m >= static_cast<Index>(pts.size())) return fail(i, "index out of range");
    if (!is_island(pts, island)) return fail(i, describe(island) + " is not an island");
    if (i > 0 && intersection_size(trace.vertices[i - 1], island) != l)
      return fail(i, "consecutive vertices do not share exactly l points");
  }
  return v;
}

}  // namespace ij
