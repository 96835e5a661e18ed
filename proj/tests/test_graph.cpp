#include "doctest.h"

#include "ij/errors.hpp"
#include "ij/graph.hpp"
#include "ij/random.hpp"
#include "oracles.hpp"

using namespace ij;

namespace {

const PointSet kF4({{0, 0}, {4, 0}, {2, 4}, {2, 1}});

IslandGraph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  IslandGraph g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(Island({static_cast<Index>(i)}));
  g.adjacency.resize(n);
  for (auto [a, b] : edges) {
    g.adjacency[static_cast<std::size_t>(a)].push_back(b);
    g.adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

}  // namespace

TEST_CASE("island graph of the four-point example") {
  const IslandGraph g = build_island_graph(kF4, 3, 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(clique_number(g) == 3);
  const IslandGraph g0 = build_island_graph(kF4, 3, 0);
  CHECK(g0.edge_count() == 0);
  CHECK(components(g0).size() == 3);
  CHECK_THROWS_AS(build_island_graph(kF4, 3, 3), ParameterError);
}

TEST_CASE("convex pentagon equals the Johnson graph") {
  const PointSet pentagon({{0, 0}, {10, 0}, {13, 8}, {5, 14}, {-3, 8}});
  const IslandGraph ij = build_island_graph(pentagon, 3, 2);
  const IslandGraph gj = build_generalized_johnson(5, 3, 2);
  CHECK(ij.vertices == gj.vertices);
  CHECK(ij.adjacency == gj.adjacency);
}

TEST_CASE("generalized Johnson graphs") {
  const IslandGraph j53 = build_generalized_johnson(5, 3, 2);
  CHECK(j53.vertex_count() == 10);
  for (const auto& row : j53.adjacency) CHECK(row.size() == 6);
  CHECK(build_generalized_johnson(4, 2, 0).edge_count() == 3);

  for (std::size_t n = 4; n <= 9; ++n)
    for (std::size_t k = 1; k <= 4 && k <= n; ++k)
      for (std::size_t l = 0; l < k; ++l) {
        const IslandGraph g = build_generalized_johnson(n, k, l);
        CHECK(g.vertex_count() == oracle::choose(n, k));
        const std::size_t degree = oracle::choose(k, l) * oracle::choose(n - k, k - l);
        for (const auto& row : g.adjacency) CHECK(row.size() == degree);
      }
}

TEST_CASE("edge strategies agree") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PointSet ps(generate_points(Shape::RandomDisk, 14, seed));
    for (std::size_t l = 1; l < 4; ++l) {
      const IslandGraph a = build_island_graph(ps, 4, l, {}, EdgeStrategy::Pairwise);
      const IslandGraph b = build_island_graph(ps, 4, l, {}, EdgeStrategy::Inverted);
      CHECK(a.adjacency == b.adjacency);
    }
  }
  CHECK_THROWS_AS(build_island_graph(kF4, 3, 0, {}, EdgeStrategy::Inverted), ParameterError);
}

TEST_CASE("edges match the definition") {
  const auto pts = generate_points(Shape::RandomDisk, 11, 8);
  const IslandGraph g = build_island_graph(PointSet(pts), 3, 1);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const bool edge = u != v && oracle::common(g.vertices[u].members, g.vertices[v].members) == 1;
      CHECK(g.adjacent(static_cast<int>(u), static_cast<int>(v)) == edge);
    }
}

TEST_CASE("graph caps") {
  ResourceCaps caps;
  caps.max_vertices = 5;
  CHECK_THROWS_AS(build_generalized_johnson(6, 3, 1, caps), ResourceCapExceeded);
  caps = {};
  caps.max_pairs = 10;
  CHECK_THROWS_AS(build_generalized_johnson(7, 3, 1, caps), ResourceCapExceeded);
}

TEST_CASE("components and distances") {
  CHECK(components(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).size() == 1);
  CHECK(components(from_edges(3, {})).size() == 3);
  const auto comps = components(from_edges(5, {{3, 4}, {0, 2}}));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 2});
  CHECK(comps[1] == std::vector<int>{1});
  CHECK(comps[2] == std::vector<int>{3, 4});
  CHECK(bfs_distances(from_edges(4, {{0, 1}, {1, 2}}), 0) == std::vector<int>{0, 1, 2, -1});
}

TEST_CASE("shortest paths") {
  const IslandGraph j = build_generalized_johnson(5, 3, 2);
  const int a = j.find(Island({0, 1, 2}));
  const int b = j.find(Island({2, 3, 4}));
  CHECK(shortest_path(j, a, a) == std::vector<int>{a});
  CHECK(shortest_path(j, a, b).size() == 3);
  CHECK(shortest_path(j, a, j.adjacency[static_cast<std::size_t>(a)][0]).size() == 2);
  CHECK_THROWS_AS(shortest_path(from_edges(2, {}), 0, 1), Unreachable);
}

TEST_CASE("diameter") {
  CHECK(diameter(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).diameter == 1);
  CHECK(diameter(from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).diameter == 3);
  const IslandGraph petersen = build_generalized_johnson(5, 2, 0);
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(diameter(petersen).diameter == 2);
  CHECK_FALSE(diameter(build_generalized_johnson(5, 3, 0)).connected);
  const auto split = diameter(from_edges(5, {{0, 1}, {2, 3}, {3, 4}}));
  CHECK_FALSE(split.connected);
  CHECK(split.component_diameters == std::vector<int>{1, 2});

  // Threaded all-pairs BFS against Floyd-Warshall.
  for (std::size_t n = 6; n <= 8; ++n) {
    const IslandGraph j = build_generalized_johnson(n, 3, 2);
    CHECK(diameter(j).diameter == oracle::diameter(j.adjacency));
  }
  const PointSet ps(generate_points(Shape::RandomDisk, 12, 3));
  const IslandGraph g = build_island_graph(ps, 4, 2);
  const auto d = diameter(g);
  const int expected = oracle::diameter(g.adjacency);
  CHECK(d.connected == (expected >= 0));
  if (d.connected) CHECK(d.diameter == expected);
}

TEST_CASE("clique number") {
  CHECK(clique_number(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
  CHECK(clique_number(from_edges(4, {})) == 1);
  CHECK(clique_number(build_generalized_johnson(5, 2, 0)) == 2);
  // Kneser K(n,k): floor(n/k) pairwise disjoint k-sets.
  CHECK(clique_number(build_generalized_johnson(9, 2, 0)) == 4);
  // J(n,2): the n-1 pairs through one element.
  CHECK(clique_number(build_generalized_johnson(7, 2, 1)) == 6);
  bool thrown = false;
  try {
    clique_number(build_generalized_johnson(12, 3, 1), 5);
  } catch (const BudgetExceeded& e) {
    thrown = true;
    CHECK(e.lower_bound() >= 1);
  }
  CHECK(thrown);
}

TEST_CASE("graph report") {
  const GraphReport r = analyze_graph(build_island_graph(kF4, 3, 2), {.with_clique = true});
  CHECK(r.vertices == 3);
  CHECK(r.edges == 3);
  CHECK(r.component_sizes == std::vector<std::size_t>{3});
  CHECK(r.diameter == 1);
  CHECK(r.clique == 3);
  CHECK(r.min_degree == 2);
  CHECK(r.mean_degree == doctest::Approx(2.0));

  const GraphReport j = analyze_graph(build_generalized_johnson(5, 3, 2));
  CHECK(j.min_degree == 6);
  CHECK(j.max_degree == 6);
  CHECK_FALSE(j.clique.has_value());
}
