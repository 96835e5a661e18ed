#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ij/islands.hpp"

namespace ij {

enum class EdgeStrategy {
  Pairwise,  // all vertex pairs, sorted-merge intersection count
  Inverted,  // group vertices by shared l-subsets; requires l > 0
  Automatic,
};

// Vertices are k-subsets (islands or abstract subsets) in lexicographic
// order; A ~ B iff |A n B| == l exactly.
struct IslandGraph {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<Island> vertices;
  std::vector<std::vector<int>> adjacency;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const;
  // Vertex id of a subset, or -1.
  int find(const Island& island) const;
  bool adjacent(int u, int v) const;
};

// Exact-l graph over an already sorted, duplicate-free vertex list.
IslandGraph build_exact_intersection_graph(std::vector<Island> vertices, std::size_t k,
                                           std::size_t l, const ResourceCaps& caps = {},
                                           EdgeStrategy strategy = EdgeStrategy::Automatic);

// IJ(P, k, l).
IslandGraph build_island_graph(const PointSet& pts, std::size_t k, std::size_t l,
                               const ResourceCaps& caps = {},
                               EdgeStrategy strategy = EdgeStrategy::Automatic);

// GJ(n, k, l) over labels 0..n-1.
IslandGraph build_generalized_johnson(std::size_t n, std::size_t k, std::size_t l,
                                      const ResourceCaps& caps = {});

// Components ordered by their least vertex; each list ascending.
std::vector<std::vector<int>> components(const IslandGraph& g);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const IslandGraph& g, int source);

// Throws Unreachable when the endpoints lie in different components.
std::vector<int> shortest_path(const IslandGraph& g, int from, int to);

struct DiameterResult {
  bool connected = true;
  int diameter = 0;                     // valid when connected
  std::vector<int> component_diameters; // in components() order
};

// All-pairs BFS, split over source vertices across threads.
DiameterResult diameter(const IslandGraph& g);

// Exact maximum clique by colour-bounded branch and bound. Throws
// BudgetExceeded once more than `node_budget` search nodes are expanded.
std::size_t clique_number(const IslandGraph& g, std::size_t node_budget = 10'000'000);

struct GraphReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> component_sizes;
  std::optional<int> diameter;
  std::vector<int> component_diameters;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;
  std::optional<std::size_t> clique;
  std::optional<std::size_t> clique_lower_bound;  // set when the budget ran out
};

struct ReportOptions {
  bool with_diameter = true;
  bool with_clique = false;
  std::size_t clique_budget = 10'000'000;
};

GraphReport analyze_graph(const IslandGraph& g, const ReportOptions& options = {});

}  // namespace ij
