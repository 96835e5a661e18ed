#include "ij/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "ij/errors.hpp"

namespace ij {

std::size_t IslandGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

int IslandGraph::find(const Island& island) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), island);
  if (it == vertices.end() || *it != island) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool IslandGraph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

namespace {

void check_cap(std::uint64_t pairs, const ResourceCaps& caps) {
  if (pairs > caps.max_pairs) {
    std::ostringstream msg;
    msg << "graph build: " << pairs << " candidate pairs exceed cap " << caps.max_pairs;
    throw ResourceCapExceeded(msg.str());
  }
}

void edges_pairwise(IslandGraph& g, const ResourceCaps& caps) {
  const std::size_t v = g.vertices.size();
  check_cap(static_cast<std::uint64_t>(v) * (v - (v > 0)) / 2, caps);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (intersection_size(g.vertices[i], g.vertices[j]) == g.l) {
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
      }
}

// Every edge (A, B) is seen under exactly one key, the l-subset A n B.
void edges_inverted(IslandGraph& g, const ResourceCaps& caps) {
  const std::size_t l = g.l;
  std::vector<std::pair<std::vector<Index>, int>> keyed;
  keyed.reserve(g.vertices.size() * binomial(g.k, l));
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& members = g.vertices[v].members;
    for_each_subset(static_cast<int>(members.size()), static_cast<int>(l),
                    [&](std::span<const Index> pick) {
                      std::vector<Index> key(l);
                      for (std::size_t t = 0; t < l; ++t) key[t] = members[static_cast<std::size_t>(pick[t])];
                      keyed.emplace_back(std::move(key), static_cast<int>(v));
                    });
  }
  std::sort(keyed.begin(), keyed.end());
  std::uint64_t pairs = 0;
  for (std::size_t lo = 0; lo < keyed.size();) {
    std::size_t hi = lo;
    while (hi < keyed.size() && keyed[hi].first == keyed[lo].first) ++hi;
    const std::uint64_t run = hi - lo;
    pairs += run * (run - 1) / 2;
    lo = hi;
  }
  check_cap(pairs, caps);
  for (std::size_t lo = 0; lo < keyed.size();) {
    std::size_t hi = lo;
    while (hi < keyed.size() && keyed[hi].first == keyed[lo].first) ++hi;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < hi; ++j) {
        const int a = keyed[i].second, b = keyed[j].second;
        if (intersection_size(g.vertices[static_cast<std::size_t>(a)],
                              g.vertices[static_cast<std::size_t>(b)]) == l) {
          g.adjacency[static_cast<std::size_t>(a)].push_back(b);
          g.adjacency[static_cast<std::size_t>(b)].push_back(a);
        }
      }
    lo = hi;
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace

IslandGraph build_exact_intersection_graph(std::vector<Island> vertices, std::size_t k,
                                           std::size_t l, const ResourceCaps& caps,
                                           EdgeStrategy strategy) {
  if (l >= k) throw ParameterError("graph build: need l < k");
  if (vertices.size() > caps.max_vertices) {
    std::ostringstream msg;
    msg << "graph build: " << vertices.size() << " vertices exceed cap " << caps.max_vertices;
    throw ResourceCapExceeded(msg.str());
  }
  IslandGraph g;
  g.k = k;
  g.l = l;
  g.vertices = std::move(vertices);
  g.adjacency.assign(g.vertices.size(), {});
  if (strategy == EdgeStrategy::Automatic)
    strategy = (l > 0 && g.vertices.size() > 2000) ? EdgeStrategy::Inverted : EdgeStrategy::Pairwise;
  if (strategy == EdgeStrategy::Inverted) {
    if (l == 0) throw ParameterError("inverted edge strategy needs l > 0");
    edges_inverted(g, caps);
  } else {
    edges_pairwise(g, caps);
  }
  return g;
}

IslandGraph build_island_graph(const PointSet& pts, std::size_t k, std::size_t l,
                               const ResourceCaps& caps, EdgeStrategy strategy) {
  if (l >= k) throw ParameterError("build_island_graph: need l < k");
  if (k > pts.size()) throw ParameterError("build_island_graph: need k <= |P|");
  IslandList list = enumerate_islands(pts, k, caps);
  return build_exact_intersection_graph(std::move(list.islands), k, l, caps, strategy);
}

IslandGraph build_generalized_johnson(std::size_t n, std::size_t k, std::size_t l,
                                      const ResourceCaps& caps) {
  if (l >= k || k > n) throw ParameterError("build_generalized_johnson: need l < k <= n");
  const std::uint64_t count = binomial(n, k);
  if (count > caps.max_vertices) {
    std::ostringstream msg;
    msg << "build_generalized_johnson: C(" << n << "," << k << ") = " << count
        << " exceeds vertex cap " << caps.max_vertices;
    throw ResourceCapExceeded(msg.str());
  }
  std::vector<Island> vertices;
  vertices.reserve(count);
  for_each_subset(static_cast<int>(n), static_cast<int>(k), [&](std::span<const Index> s) {
    Island island;
    island.members.assign(s.begin(), s.end());
    vertices.push_back(std::move(island));
  });
  return build_exact_intersection_graph(std::move(vertices), k, l, caps);
}

std::vector<std::vector<int>> components(const IslandGraph& g) {
  const std::size_t v = g.vertex_count();
  std::vector<int> label(v, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (std::size_t s = 0; s < v; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = id;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<int> bfs_distances(const IslandGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue;
  queue.reserve(g.vertex_count());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> shortest_path(const IslandGraph& g, int from, int to) {
  const std::size_t v = g.vertex_count();
  if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= v || static_cast<std::size_t>(to) >= v)
    throw ParameterError("shortest_path: vertex out of range");
  std::vector<int> parent(v, -1);
  std::vector<char> seen(v, 0);
  std::deque<int> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(to)]) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) throw Unreachable("shortest_path: endpoints in different components");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

DiameterResult diameter(const IslandGraph& g) {
  const std::size_t v = g.vertex_count();
  auto comps = components(g);
  std::vector<int> comp_of(v, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int u : comps[c]) comp_of[static_cast<std::size_t>(u)] = static_cast<int>(c);

  std::vector<int> eccentricity(v, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s = next++; s < v; s = next++) {
      auto dist = bfs_distances(g, static_cast<int>(s));
      eccentricity[s] = *std::max_element(dist.begin(), dist.end());
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (v < 200 || hw == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < hw; ++t) workers.emplace_back(work);
  }

  DiameterResult result;
  result.connected = comps.size() <= 1;
  result.component_diameters.assign(comps.size(), 0);
  for (std::size_t u = 0; u < v; ++u) {
    int& d = result.component_diameters[static_cast<std::size_t>(comp_of[u])];
    d = std::max(d, eccentricity[u]);
  }
  if (result.connected && !comps.empty()) result.diameter = result.component_diameters[0];
  return result;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const IslandGraph& g, std::size_t budget) : g_(g), budget_(budget) {}

  std::size_t run() {
    std::vector<int> candidates(g_.vertex_count());
    std::iota(candidates.begin(), candidates.end(), 0);
    // Higher degree first tends to find large cliques early.
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return g_.adjacency[static_cast<std::size_t>(a)].size() > g_.adjacency[static_cast<std::size_t>(b)].size();
    });
    best_ = g_.vertex_count() > 0 ? 1 : 0;
    expand(0, candidates);
    return best_;
  }

 private:
  // Greedy colouring of the candidate set; colour classes bound the clique
  // size reachable from each prefix.
  void colour(const std::vector<int>& cand, std::vector<int>& order, std::vector<int>& bound) const {
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int w : classes[c])
          if (g_.adjacent(v, w)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c + 1));
      }
  }

  void expand(std::size_t size, const std::vector<int>& cand) {
    if (++nodes_ > budget_) throw BudgetExceeded("clique_number: node budget exhausted", best_);
    std::vector<int> order, bound;
    colour(cand, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + static_cast<std::size_t>(bound[i]) <= best_) return;
      const int v = order[i];
      std::vector<int> next;
      for (std::size_t j = 0; j < i; ++j)
        if (g_.adjacent(v, order[j])) next.push_back(order[j]);
      if (next.empty()) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(size + 1, next);
      }
    }
  }

  const IslandGraph& g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const IslandGraph& g, std::size_t node_budget) {
  return CliqueSearch(g, node_budget).run();
}

GraphReport analyze_graph(const IslandGraph& g, const ReportOptions& options) {
  GraphReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  for (const auto& c : components(g)) r.component_sizes.push_back(c.size());
  if (r.vertices > 0) {
    r.min_degree = g.adjacency[0].size();
    std::size_t total = 0;
    for (const auto& nbrs : g.adjacency) {
      r.min_degree = std::min(r.min_degree, nbrs.size());
      r.max_degree = std::max(r.max_degree, nbrs.size());
      total += nbrs.size();
    }
    r.mean_degree = static_cast<double>(total) / static_cast<double>(r.vertices);
  }
  if (options.with_diameter) {
    DiameterResult d = diameter(g);
    if (d.connected && r.vertices > 0) r.diameter = d.diameter;
    r.component_diameters = d.component_diameters;
  }
  if (options.with_clique) {
    try {
      r.clique = clique_number(g, options.clique_budget);
    } catch (const BudgetExceeded& e) {
      r.clique_lower_bound = e.lower_bound();
    }
  }
  return r;
}

}  // namespace ij
