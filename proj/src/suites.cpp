#include "ij/suites.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ij/errors.hpp"
#include "ij/random.hpp"

namespace ij {

namespace {

constexpr std::array<std::string_view, 7> kSuites = {
    "theorem-main", "interval-iff", "projectable-iso", "horton-depth",
    "depth-gap",    "triangle-count", "lower-bound"};

std::uint64_t cell_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t s = SplitMix64(seed).next();
  for (std::uint64_t key : keys) s = SplitMix64(s ^ key).next();
  return s;
}

Json points_json(std::span<const Point> pts) {
  Json out = Json::array();
  for (const Point& p : pts) out.push_back({p.x, p.y});
  return out;
}

bool selected(const std::optional<std::size_t>& want, std::size_t value) {
  return !want || *want == value;
}

struct Collector {
  Json cells = Json::array();
  Json counterexamples = Json::array();
  bool passed = true;
  std::size_t divergences = 0;

  void add(Json cell, bool ok) {
    cell["passed"] = ok;
    passed = passed && ok;
    cells.push_back(std::move(cell));
  }
};

void theorem_main(const SuiteOptions& o, Collector& c) {
  const std::size_t sets = o.samples ? o.samples : 2;
  constexpr std::size_t kPairs = 5;
  constexpr std::size_t kMaxN = 24;
  for (std::size_t k = 2; k <= 5; ++k) {
    if (!selected(o.k, k)) continue;
    for (std::size_t l = 0; l < k; ++l) {
      if (!selected(o.l, l)) continue;
      const std::size_t thr = shrink_threshold(k, l);
      std::vector<std::size_t> ns;
      if (o.n) {
        if (*o.n > thr) ns.push_back(*o.n);
      } else if (thr + 1 <= kMaxN) {
        ns = {thr + 1, (thr + 1 + kMaxN) / 2, kMaxN};
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
      }
      for (std::size_t n : ns) {
        bool connected = true, valid = true, bounded = true;
        std::size_t paths = 0, max_length = 0, retries = 0, divergences = 0;
        const std::size_t bound = theorem1_length_bound(n, k, l);
        for (std::size_t s = 0; s < sets; ++s) {
          const std::uint64_t seed = cell_seed(o.seed, {k, l, n, s});
          const PointSet pts(generate_points(Shape::RandomDisk, n, seed));
          const IslandGraph g = build_island_graph(pts, k, l, o.caps);
          const bool conn = components(g).size() == 1;
          connected = connected && conn;
          if (!conn)
            c.counterexamples.push_back(
                {{"k", k}, {"l", l}, {"points", points_json(pts.points())}, {"issue", "disconnected"}});
          SplitMix64 rng(seed);
          for (std::size_t p = 0; p < kPairs; ++p) {
            const Island& a = g.vertices[rng.below(g.vertex_count())];
            const Island& b = g.vertices[rng.below(g.vertex_count())];
            const PathTrace t = theorem1_path(pts, a, b, l);
            const PathValidation v = validate_path(pts, t, k, l);
            ++paths;
            max_length = std::max(max_length, t.length());
            retries += t.log.recipe_retries;
            divergences += t.log.divergences.size();
            if (!v.ok || t.length() > bound) {
              valid = valid && v.ok;
              bounded = bounded && t.length() <= bound;
              c.counterexamples.push_back({{"k", k},
                                           {"l", l},
                                           {"points", points_json(pts.points())},
                                           {"from", to_json(a)},
                                           {"to", to_json(b)},
                                           {"length", t.length()},
                                           {"issue", v.ok ? "too long" : v.reason}});
            }
          }
        }
        c.divergences += divergences;
        c.add({{"n", n}, {"k", k}, {"l", l}, {"threshold", thr}, {"sets", sets}, {"paths", paths},
               {"connected", connected}, {"valid", valid}, {"max_length", max_length},
               {"length_bound", bound}, {"recipe_retries", retries}, {"divergences", divergences}},
              connected && valid && bounded);
      }
    }
  }
}

bool linear_path_ok(const LinearModel& m, const LinearPath& p, const IntervalIsland& from,
                    const IntervalIsland& to) {
  if (p.vertices.empty() || p.vertices.front() != from || p.vertices.back() != to) return false;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!m.valid(p.vertices[i])) return false;
    if (i > 0 && interval_intersection(m, p.vertices[i - 1], p.vertices[i]) !=
                     static_cast<std::size_t>(m.l))
      return false;
  }
  return static_cast<int>(p.length()) <= linear_path_bound(m.n, m.k, m.l);
}

void interval_iff(const SuiteOptions& o, Collector& c) {
  const int max_n = o.n ? static_cast<int>(*o.n) : 40;
  for (int k = 3; k <= 8; ++k) {
    if (!selected(o.k, static_cast<std::size_t>(k))) continue;
    for (int l = 2; l < k; ++l) {
      if (!selected(o.l, static_cast<std::size_t>(l))) continue;
      Json mismatches = Json::array();
      std::size_t checked_paths = 0, bad_paths = 0;
      for (int n = k; n <= max_n; ++n) {
        const LinearModel m{n, k, l, true};
        const IslandGraph g = build_linear_graph(m);
        const bool connected = components(g).size() == 1;
        const bool predicted = connectivity_threshold(n, k, l);
        if (connected != predicted)
          mismatches.push_back({{"n", n}, {"connected", connected}, {"predicted", predicted}});
        if (!connected) continue;
        const auto all = m.intervals();
        for (const IntervalIsland& from : {all.front(), all.back()})
          for (const IntervalIsland& to : all) {
            ++checked_paths;
            if (!linear_path_ok(m, linear_path(m, from, to), from, to)) {
              ++bad_paths;
              c.counterexamples.push_back({{"n", n}, {"k", k}, {"l", l},
                                           {"from", {from.end, from.has_apex}},
                                           {"to", {to.end, to.has_apex}}});
            }
          }
      }
      const bool ok = mismatches.empty() && bad_paths == 0;
      if (!mismatches.empty())
        c.counterexamples.push_back({{"k", k}, {"l", l}, {"mismatches", mismatches}});
      c.add({{"k", k}, {"l", l}, {"n_min", k}, {"n_max", max_n}, {"mismatches", mismatches.size()},
             {"paths_checked", checked_paths}, {"path_failures", bad_paths}},
            ok);
    }
  }
}

void projectable_iso(const SuiteOptions& o, Collector& c) {
  const std::size_t sets = o.samples ? o.samples : 2;
  for (std::size_t n = 4; n <= 12; ++n) {
    if (!selected(o.n, n)) continue;
    for (std::size_t s = 0; s < sets; ++s) {
      const PointSet pts(generate_points(Shape::RandomDisk, n, cell_seed(o.seed, {n, s})));
      for (std::size_t k = 2; k < n && k <= 5; ++k) {
        if (!selected(o.k, k)) continue;
        std::vector<Island> projectable;
        for (const Island& v : enumerate_islands(pts, k, o.caps).islands)
          if (is_projectable(pts, v)) projectable.push_back(v);
        for (std::size_t l = 0; l < k; ++l) {
          if (!selected(o.l, l)) continue;
          const LinearModel m{static_cast<int>(n), static_cast<int>(k), static_cast<int>(l), true};
          const auto intervals = m.intervals();
          bool bijective = projectable.size() == intervals.size();
          std::vector<Island> lifted;
          for (const IntervalIsland& v : intervals) {
            Island lift = lift_interval(pts, v, m.k);
            bijective = bijective && is_island(pts, lift) && project_island(pts, lift) == v;
            lifted.push_back(std::move(lift));
          }
          std::sort(lifted.begin(), lifted.end());
          bijective = bijective && lifted == projectable;
          std::size_t edge_mismatches = 0, edges = 0;
          for (std::size_t i = 0; i < intervals.size(); ++i)
            for (std::size_t j = i + 1; j < intervals.size(); ++j) {
              const bool model = interval_intersection(m, intervals[i], intervals[j]) == l;
              const bool geometric =
                  intersection_size(lift_interval(pts, intervals[i], m.k),
                                    lift_interval(pts, intervals[j], m.k)) == l;
              edges += model;
              edge_mismatches += model != geometric;
            }
          const bool ok = bijective && edge_mismatches == 0;
          if (!ok)
            c.counterexamples.push_back(
                {{"n", n}, {"k", k}, {"l", l}, {"points", points_json(pts.points())}});
          c.add({{"n", n}, {"k", k}, {"l", l}, {"set", s}, {"projectable", projectable.size()},
                 {"intervals", intervals.size()}, {"edges", edges}, {"bijective", bijective},
                 {"edge_mismatches", edge_mismatches}},
                ok);
        }
      }
    }
  }
}

void horton_depth(const SuiteOptions& o, Collector& c) {
  const std::size_t max_n = o.n ? *o.n : 16;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const HortonSet h = generate_horton(n);
    const bool verified = verify_horton(h);
    std::vector<int> depths;
    std::size_t mismatches = 0;
    for (std::size_t lab = 1; lab <= n; ++lab) {
      const std::size_t one[] = {lab};
      depths.push_back(point_depth(lab));
      mismatches += depths.back() != depth_by_definition(one, n);
    }
    std::size_t island_checks = 0;
    if (n <= 16)
      for (std::size_t k = 2; k <= std::min<std::size_t>(3, n); ++k)
        for (const Island& v : enumerate_islands(h.points, k, o.caps).islands) {
          std::vector<std::size_t> labels;
          for (Index i : v.members) labels.push_back(static_cast<std::size_t>(i) + 1);
          ++island_checks;
          mismatches += island_depth(v) != depth_by_definition(labels, n);
        }
    const bool ok = verified && mismatches == 0;
    if (!ok) c.counterexamples.push_back({{"n", n}, {"depths", depths}});
    c.add({{"n", n}, {"verified", verified}, {"depths", depths}, {"island_checks", island_checks},
           {"mismatches", mismatches}},
          ok);
  }
}

void depth_gap(const SuiteOptions& o, Collector& c) {
  const std::size_t n = o.n ? *o.n : 32;
  const HortonSet h = generate_horton(n);
  constexpr std::pair<std::size_t, std::size_t> kCells[] = {{3, 2}, {4, 2}, {4, 3},
                                                            {5, 2}, {5, 3}, {5, 4}};
  for (auto [k, l] : kCells) {
    if (!selected(o.k, k) || !selected(o.l, l) || k > n) continue;
    const DepthGapReport r = depth_gap_scan(h, k, l, o.caps);
    Json cell = to_json(r);
    cell["n"] = n;
    cell["k"] = k;
    cell["l"] = l;
    if (r.violations) c.counterexamples.push_back({{"n", n}, {"k", k}, {"l", l}});
    c.add(std::move(cell), r.violations == 0);
  }
}

void triangle_count(const SuiteOptions& o, Collector& c) {
  const std::size_t n = o.n ? *o.n : 32;
  const HortonSet h = generate_horton(n);
  struct Tally {
    std::size_t triples = 0, violations = 0, min_count = SIZE_MAX, bound = 0;
  };
  std::vector<Tally> by_r;
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t y = x + 1; y <= n; ++y) {
      const int pair_depth = std::min(point_depth(x), point_depth(y));
      for (std::size_t z = 1; z <= n; ++z) {
        if (point_depth(z) >= pair_depth) continue;
        const TriangleDepthCount t = triangle_depth_count(h, x, y, z);
        const auto r = static_cast<std::size_t>(t.r);
        if (by_r.size() <= r) by_r.resize(r + 1);
        Tally& tally = by_r[r];
        ++tally.triples;
        tally.bound = t.bound;
        tally.min_count = std::min(tally.min_count, t.count);
        if (!t.holds()) {
          ++tally.violations;
          c.counterexamples.push_back({{"x", x}, {"y", y}, {"z", z}, {"count", t.count}, {"bound", t.bound}});
        }
      }
    }
  for (std::size_t r = 1; r < by_r.size(); ++r) {
    const Tally& t = by_r[r];
    if (!t.triples) continue;
    c.add({{"n", n}, {"r", r}, {"triples", t.triples}, {"bound", t.bound},
           {"min_count", t.min_count}, {"violations", t.violations}},
          t.violations == 0);
  }
}

void lower_bound(const SuiteOptions& o, Collector& c) {
  const std::size_t n = o.n ? *o.n : 64;
  const std::size_t k = o.k ? *o.k : 4;
  const std::size_t l = o.l ? *o.l : 2;
  const LowerBoundReport r = lower_bound_experiment(generate_horton(n), k, l, o.caps);
  Json cell = to_json(r);
  cell["n"] = n;
  cell["k"] = k;
  cell["l"] = l;
  c.add(std::move(cell), r.holds);
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  Collector c;
  if (name == "theorem-main") theorem_main(options, c);
  else if (name == "interval-iff") interval_iff(options, c);
  else if (name == "projectable-iso") projectable_iso(options, c);
  else if (name == "horton-depth") horton_depth(options, c);
  else if (name == "depth-gap") depth_gap(options, c);
  else if (name == "triangle-count") triangle_count(options, c);
  else if (name == "lower-bound") lower_bound(options, c);
  else throw ParameterError("unknown suite '" + std::string(name) + "'");
  if (c.cells.empty()) throw PreconditionViolation("suite '" + std::string(name) + "': no admissible cell");

  SuiteResult result;
  result.passed = c.passed;
  result.divergences = c.divergences;
  result.report = {{"suite", name},
                   {"provenance", provenance(options.seed)},
                   {"cells", std::move(c.cells)},
                   {"counterexamples", std::move(c.counterexamples)},
                   {"divergences", c.divergences},
                   {"passed", c.passed}};
  return result;
}

}  // namespace ij
