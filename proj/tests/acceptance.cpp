// Acceptance run: one PASS/FAIL line per criterion, with runtimes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ij/horton.hpp"
#include "ij/io.hpp"
#include "ij/paths.hpp"
#include "ij/random.hpp"
#include "ij/suites.hpp"
#include "oracles.hpp"

using namespace ij;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool graphs_equal(const IslandGraph& a, const IslandGraph& b) {
  if (a.vertices != b.vertices) return false;
  for (std::size_t u = 0; u < a.vertex_count(); ++u) {
    auto x = a.adjacency[u], y = b.adjacency[u];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

std::vector<Point> members(const PointSet& ps, const Island& s) {
  std::vector<Point> out;
  for (Index i : s.members) out.push_back(ps[i]);
  return out;
}

bool oracle_valid(const std::vector<Point>& pts, const PathTrace& t, std::size_t k, std::size_t l) {
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i].members;
    if (v.size() != k || !oracle::is_island(pts, v)) return false;
    if (i && oracle::common(t.vertices[i - 1].members, v) != l) return false;
  }
  return true;
}

Outcome convex_identity() {
  std::size_t cases = 0;
  for (std::size_t n = 5; n <= 10; ++n)
    for (std::size_t k = 2; k <= 4; ++k) {
      const PointSet ps(generate_points(Shape::Convex, n, 100 + n));
      if (enumerate_islands(ps, k).islands.size() != oracle::choose(n, k))
        return {false, fmt("island count differs at n=%zu k=%zu", n, k)};
      for (std::size_t l = 0; l < k; ++l, ++cases)
        if (!graphs_equal(build_island_graph(ps, k, l), build_generalized_johnson(n, k, l)))
          return {false, fmt("IJ != GJ at n=%zu k=%zu l=%zu", n, k, l)};
    }
  return {true, fmt("%zu (n,k,l) cases", cases)};
}

Outcome interval_iff() {
  std::size_t cases = 0;
  for (int k = 4; k <= 8; ++k)
    for (int l = 2; l < k; ++l)
      for (int n = k; n <= 40; ++n, ++cases) {
        const bool connected = components(build_linear_graph({n, k, l, true})).size() == 1;
        const bool predicted = n >= 3 * k - 2 * l - 1 || n == k;
        if (connected != predicted || connectivity_threshold(n, k, l) != predicted)
          return {false, fmt("mismatch at n=%d k=%d l=%d", n, k, l)};
      }
  return {true, fmt("%zu models", cases)};
}

Outcome residue() {
  std::size_t cases = 0;
  for (int k = 2; k <= 8; ++k)
    for (int l = 1; l < k; ++l)
      for (int s = k; s <= 40; ++s, ++cases) {
        const LinearModel m{s + 1, k, l, false};
        const IslandGraph g = build_linear_graph(m);
        const auto classes = residue_decomposition(m);
        const int d = k - l;
        if (classes.size() != static_cast<std::size_t>(d)) return {false, fmt("class count at |S|=%d k=%d l=%d", s, k, l)};
        std::size_t covered = 0, nonempty = 0;
        for (std::size_t r = 0; r < classes.size(); ++r) {
          const auto& p = classes[r];
          covered += p.size();
          nonempty += !p.empty();
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].end % d != static_cast<int>(r)) return {false, fmt("residue mismatch at |S|=%d k=%d l=%d", s, k, l)};
            for (std::size_t j = i + 1; j < p.size(); ++j)
              if (g.adjacent(g.find(m.members(p[i])), g.find(m.members(p[j]))) != (j == i + 1))
                return {false, fmt("not an induced path at |S|=%d k=%d l=%d", s, k, l)};
          }
        }
        if (covered != g.vertex_count() || components(g).size() != nonempty)
          return {false, fmt("classes are not the components at |S|=%d k=%d l=%d", s, k, l)};
      }
  return {true, fmt("%zu models", cases)};
}

Outcome theorem_main() {
  const std::pair<std::size_t, std::size_t> params[] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}, {2, 0}, {4, 1}};
  SplitMix64 rng(2024);
  std::size_t sets = 0, paths = 0, divergences = 0, longest_ratio_num = 0, longest_ratio_den = 1;
  for (std::uint64_t seed = 1; sets < 210; ++seed) {
    const std::size_t n = 12 + rng.below(13);
    const auto [k, l] = params[seed % std::size(params)];
    if (n <= shrink_threshold(k, l)) continue;
    const auto pts = generate_points(Shape::RandomDisk, n, seed);
    const PointSet ps(pts);
    const IslandGraph g = build_island_graph(ps, k, l);
    ++sets;
    if (components(g).size() != 1) return {false, fmt("IJ(P,%zu,%zu) disconnected, n=%zu seed=%llu", k, l, n, (unsigned long long)seed)};
    const std::size_t bound = theorem1_length_bound(n, k, l);
    for (int q = 0; q < 20; ++q, ++paths) {
      const Island& a = g.vertices[rng.below(g.vertex_count())];
      const Island& b = g.vertices[rng.below(g.vertex_count())];
      const PathTrace t = theorem1_path(ps, a, b, l);
      divergences += t.log.divergences.size();
      if (!validate_path(ps, t, k, l).ok || !oracle_valid(pts, t, k, l) || t.vertices.front() != a ||
          t.vertices.back() != b)
        return {false, fmt("invalid path, n=%zu k=%zu l=%zu seed=%llu", n, k, l, (unsigned long long)seed)};
      if (t.length() > bound)
        return {false, fmt("length %zu > %zu, n=%zu k=%zu l=%zu", t.length(), bound, n, k, l)};
      if (t.length() * longest_ratio_den > longest_ratio_num * bound) {
        longest_ratio_num = t.length();
        longest_ratio_den = bound;
      }
    }
  }
  return {true, fmt("%zu sets, %zu paths, worst length/bound %zu/%zu, %zu divergences repaired by search", sets,
                    paths, longest_ratio_num, longest_ratio_den, divergences)};
}

Outcome halving() {
  const std::pair<std::size_t, std::size_t> params[] = {{2, 1}, {3, 1}, {4, 2}, {4, 1}};
  std::size_t instances = 0, max_rounds = 0, unbisected = 0;
  double fit_a = 0;
  for (std::uint64_t seed = 1; instances < 120; ++seed) {
    const auto [k, l] = params[seed % std::size(params)];
    const std::size_t thr = shrink_threshold(k, l);
    const std::size_t n = std::max<std::size_t>(2 * thr, 40 + 8 * (seed % 4));
    const auto pts = generate_points(Shape::RandomDisk, n, 500 + seed);
    const PointSet ps(pts);
    const auto islands = enumerate_islands(ps, k).islands;
    SplitMix64 rng(seed);
    for (int q = 0; q < 2; ++q, ++instances) {
      const Island& a = islands[rng.below(islands.size())];
      const Island& b = islands[rng.below(islands.size())];
      const HalvingResult h = halving_step(ps, a, b, l);
      const auto pa = members(ps, a), pb = members(ps, b);
      bool ok = h.inside >= thr && h.inside <= n / 2 && oracle::count_inside(h.region, pts) == h.inside &&
                (!h.log.divergences.empty() || is_ham_sandwich_cut(h.cut, pa, pb)) &&
                oracle::count_inside(h.region, pa) >= (k + 1) / 2 && oracle::count_inside(h.region, pb) >= (k + 1) / 2 &&
                oracle::common(a.members, h.from_next.members) == l &&
                oracle::common(b.members, h.to_next.members) == l &&
                oracle::is_island(pts, h.from_next.members) && oracle::is_island(pts, h.to_next.members);
      for (const Island* v : {&h.from_next, &h.to_next})
        for (Index i : v->members) ok = ok && h.region.contains(ps[i]);
      unbisected += !h.log.divergences.empty();
      if (!ok) return {false, fmt("halving contract broken, n=%zu k=%zu l=%zu seed=%llu", n, k, l, (unsigned long long)seed)};

      const PathTrace t = log_path(ps, a, b, l);
      if (!validate_path(ps, t, k, l).ok || t.vertices.front() != a || t.vertices.back() != b)
        return {false, fmt("log_path invalid, n=%zu k=%zu l=%zu", n, k, l)};
      if (t.halving_rounds > halving_round_bound(n, k, l))
        return {false, fmt("%d rounds > %d, n=%zu k=%zu l=%zu", t.halving_rounds, halving_round_bound(n, k, l), n, k, l)};
      max_rounds = std::max<std::size_t>(max_rounds, static_cast<std::size_t>(t.halving_rounds));
      const double excess = static_cast<double>(t.length()) - 2.0 * static_cast<double>(k - l) - 6.0;
      fit_a = std::max(fit_a, excess / std::log2(static_cast<double>(n)));
    }
  }
  return {true, fmt("%zu instances (%zu fell back to exhaustive search), max rounds %zu; "
                    "fitted length <= %.2f*log2(n) + 2(k-l) + 6",
                    instances, unbisected, max_rounds, fit_a)};
}

Outcome horton_verify() {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1; n <= 64; ++n) sizes.push_back(n);
  sizes.push_back(128);
  sizes.push_back(256);
  for (std::size_t n : sizes)
    if (!verify_horton(generate_horton(n))) return {false, fmt("verify_horton fails at n=%zu", n)};
  const std::vector<int> expected{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5};
  const std::vector<int> text_values{1, 2, 1, 3};
  for (std::size_t lab = 1; lab <= 16; ++lab) {
    const std::size_t one[] = {lab};
    if (point_depth(lab) != expected[lab - 1] || depth_by_definition(one, 16) != expected[lab - 1] ||
        oracle::depth({lab}, 16) != expected[lab - 1])
      return {false, fmt("depth of x_%zu", lab)};
    if (lab <= 4 && point_depth(lab) != text_values[lab - 1]) return {false, "first four depths"};
  }
  return {true, fmt("%zu sizes verified, n=16 depth profile matches", sizes.size())};
}

Outcome triangle_counts() {
  const HortonSet h = generate_horton(32);
  std::size_t triples = 0, tight = 0;
  for (std::size_t x = 1; x <= 32; ++x)
    for (std::size_t y = x + 1; y <= 32; ++y)
      for (std::size_t z = 1; z <= 32; ++z) {
        if (z == x || z == y || point_depth(z) >= std::min(point_depth(x), point_depth(y))) continue;
        const auto c = triangle_depth_count(h, x, y, z);
        ++triples;
        if (!c.holds()) return {false, fmt("count %zu < %zu at (%zu,%zu,%zu)", c.count, c.bound, x, y, z)};
        tight += c.count == c.bound;
      }
  return {true, fmt("%zu triples, %zu tight", triples, tight)};
}

Outcome lower_bound() {
  const HortonSet h = generate_horton(64);
  const DepthGapReport gap = depth_gap_scan(h, 4, 2);
  if (gap.violations || gap.max_gap > 2) return {false, fmt("depth gap %d on some edge", gap.max_gap)};
  const LowerBoundReport r = lower_bound_experiment(h, 4, 2);
  const int floor = (r.max_depth - 1 + 1) / 2;  // ceil((max-1)/2)
  if (!r.distance) return {false, "no depth-1 island reachable from the deepest island"};
  if (*r.distance < floor || floor < 2 || !r.holds)
    return {false, fmt("distance %d, floor %d", *r.distance, floor)};
  return {true, fmt("%zu vertices, %zu edges, max gap %d, max depth %d (predicted %d, flag %s), distance %d >= %d",
                    gap.vertices, gap.edges, gap.max_gap, r.max_depth, r.predicted_max_depth,
                    r.depth_flag ? "set" : "clear", *r.distance, floor)};
}

Outcome oracle_identities() {
  std::size_t sets = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed)
    for (std::size_t n = 4; n <= 12; ++n, ++sets) {
      const auto pts = generate_points(Shape::RandomDisk, n, seed * 100 + n);
      const PointSet ps(pts);
      for (std::size_t k = 1; k <= 5 && k <= n; ++k) {
        std::vector<std::vector<Index>> got;
        for (const Island& v : enumerate_islands(ps, k).islands) got.push_back(v.members);
        if (got != oracle::islands(pts, static_cast<int>(k))) return {false, fmt("islands differ at n=%zu k=%zu", n, k)};
      }
      if (n >= 3 && count_empty_triangles(ps) != oracle::islands(pts, 3).size())
        return {false, fmt("empty triangles differ at n=%zu", n)};
    }
  SplitMix64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto pts = generate_points(Shape::RandomDisk, 10 + rng.below(20), rng.next());
    const std::size_t na = 1 + rng.below(6), nb = 1 + rng.below(6);
    std::vector<Point> a(pts.begin(), pts.begin() + static_cast<long>(na));
    std::vector<Point> b(pts.begin() + static_cast<long>(na), pts.begin() + static_cast<long>(na + nb));
    const HalfplanePair cut = ham_sandwich_bisect(a, b);
    auto side = [](const Halfplane& h, const std::vector<Point>& s) {
      std::size_t c = 0;
      for (const Point& p : s) c += static_cast<__int128>(h.a) * p.x + static_cast<__int128>(h.b) * p.y <= h.c;
      return c;
    };
    for (const Halfplane* h : {&cut.first, &cut.second})
      if (side(*h, a) < (na + 1) / 2 || side(*h, b) < (nb + 1) / 2) return {false, fmt("ham-sandwich instance %d", t)};
    if (cut.second.a != -cut.first.a || cut.second.b != -cut.first.b || cut.second.c != -cut.first.c)
      return {false, fmt("sides of instance %d are not one line", t)};
  }
  return {true, fmt("%zu point sets, 200 ham-sandwich instances", sets)};
}

Outcome determinism() {
  std::size_t suites = 0;
  for (std::string_view name : suite_names()) {
    SuiteOptions o;
    o.seed = 11;
    const std::string first = dump(run_suite(name, o).report);
    const std::string second = dump(run_suite(name, o).report);
    if (first != second) return {false, fmt("suite %.*s differs between runs", static_cast<int>(name.size()), name.data())};
    ++suites;
  }
  return {true, fmt("%zu suites byte-identical across two runs", suites)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"convex-position identity", convex_identity},
      {"interval-model iff", interval_iff},
      {"residue decomposition", residue},
      {"connectivity and constructive paths", theorem_main},
      {"halving contract", halving},
      {"Horton verification", horton_verify},
      {"triangle-count lemma", triangle_counts},
      {"depth gap and lower bound", lower_bound},
      {"oracle identities", oracle_identities},
      {"determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
