#include "doctest.h"

#include "ij/errors.hpp"
#include "ij/islands.hpp"
#include "ij/random.hpp"
#include "oracles.hpp"

using namespace ij;

namespace {

const PointSet kF4({{0, 0}, {4, 0}, {2, 4}, {2, 1}});

std::vector<std::vector<Index>> members(const IslandList& list) {
  std::vector<std::vector<Index>> out;
  for (const Island& s : list.islands) out.push_back(s.members);
  return out;
}

}  // namespace

TEST_CASE("island construction") {
  CHECK(Island({3, 1, 2}).members == std::vector<Index>{1, 2, 3});
  CHECK_THROWS_AS(Island({1, 1}), ParameterError);
  CHECK(intersection_size(Island({0, 1, 3}), Island({1, 2, 3})) == 2);
}

TEST_CASE("is_island on the four-point example") {
  CHECK_FALSE(is_island(kF4, Island({0, 1, 2})));
  CHECK(is_island(kF4, Island({0, 1, 3})));
  for (Index i = 0; i < 4; ++i) {
    CHECK(is_island(kF4, Island({i})));
    for (Index j = i + 1; j < 4; ++j) CHECK(is_island(kF4, Island({i, j})));
  }
  CHECK(is_island(kF4, Island({0, 1, 2, 3})));
}

TEST_CASE("enumerate_islands examples") {
  CHECK(members(enumerate_islands(kF4, 3)) ==
        std::vector<std::vector<Index>>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(enumerate_islands(kF4, 2).islands.size() == 6);
  const PointSet pentagon({{0, 0}, {10, 0}, {13, 8}, {5, 14}, {-3, 8}});
  CHECK(enumerate_islands(pentagon, 3).islands.size() == 10);
  CHECK_THROWS_AS(enumerate_islands(kF4, 5), ParameterError);
  CHECK_THROWS_AS(enumerate_islands(PointSet({{0, 0}, {1, 1}, {2, 2}}), 2), GeneralPositionViolation);
}

TEST_CASE("enumerate_islands matches the brute-force filter") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 6 + seed % 7;
    const auto pts = generate_points(Shape::RandomDisk, n, seed, {.radius = 40});
    const PointSet ps(pts);
    for (int k = 1; k <= 5; ++k) CHECK(members(enumerate_islands(ps, static_cast<std::size_t>(k))) == oracle::islands(pts, k));
  }
}

TEST_CASE("threaded enumeration is identical to the oracle count") {
  // 30 choose 4 = 27405 subsets crosses the parallel threshold.
  const auto pts = generate_points(Shape::RandomDisk, 30, 99);
  const PointSet ps(pts);
  const auto list = enumerate_islands(ps, 4);
  CHECK(std::is_sorted(list.islands.begin(), list.islands.end()));
  std::size_t expected = 0;
  for_each_subset(30, 4, [&](std::span<const Index> s) {
    expected += oracle::is_island(pts, std::vector<Index>(s.begin(), s.end()));
  });
  CHECK(list.islands.size() == expected);
}

TEST_CASE("convex position: every subset is an island") {
  for (std::size_t n = 5; n <= 10; ++n) {
    const PointSet ps(generate_points(Shape::Convex, n, n));
    for (std::size_t k = 2; k <= 4; ++k) CHECK(enumerate_islands(ps, k).islands.size() == oracle::choose(n, k));
  }
}

TEST_CASE("resource caps refuse instead of truncating") {
  const PointSet ps(generate_points(Shape::RandomDisk, 20, 1));
  ResourceCaps caps;
  caps.max_pairs = 100;
  CHECK_THROWS_AS(enumerate_islands(ps, 4, caps), ResourceCapExceeded);
}

TEST_CASE("empty triangles") {
  CHECK(count_empty_triangles(kF4) == 3);
  CHECK(count_empty_triangles(PointSet({{0, 0}, {10, 0}, {13, 8}, {5, 14}, {-3, 8}})) == 10);
  CHECK(count_empty_triangles(PointSet({{0, 0}, {1, 0}, {0, 1}})) == 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet ps(generate_points(Shape::RandomDisk, 5 + seed % 10, seed));
    CHECK(count_empty_triangles(ps) == enumerate_islands(ps, 3).islands.size());
  }
}

TEST_CASE("weight and projectability") {
  CHECK(island_weight(kF4, Island({0, 1, 3})) == 2);
  CHECK(is_projectable(kF4, Island({0, 1, 3})));
  CHECK(is_projectable(kF4, Island({0, 1, 2, 3})));
  CHECK_THROWS_AS(island_weight(kF4, Island({2, 3})), WeightUndefined);

  const PointSet ps(generate_points(Shape::RandomDisk, 6, 4));
  auto at = [&](std::initializer_list<int> positions) {
    std::vector<Index> v;
    for (int p : positions) v.push_back(ps.at_radial(p));
    std::sort(v.begin(), v.end());
    return Island(v);
  };
  CHECK(island_weight(ps, at({2, 3, 4})) == 2);
  CHECK(is_projectable(ps, at({2, 3, 4})));
  CHECK(island_weight(ps, at({0, 1, 5})) == 4);
  CHECK_FALSE(is_projectable(ps, at({1, 3, 5})));
}

TEST_CASE("restricting to a halfplane keeps islands") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto pts = generate_points(Shape::RandomDisk, 14, seed);
    const PointSet ps(pts);
    const Halfplane h{1, 0, 0};  // x <= 0
    std::vector<Index> keep;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (h.contains(pts[i])) keep.push_back(static_cast<Index>(i));
    if (keep.size() < 3) continue;
    const PointSet q = ps.subset(keep);
    const auto global = enumerate_islands(ps, 3).islands;
    for (const Island& s : enumerate_islands(q, 3).islands) {
      std::vector<Index> mapped;
      for (Index i : s.members) mapped.push_back(keep[static_cast<std::size_t>(i)]);
      CHECK(std::binary_search(global.begin(), global.end(), Island(mapped)));
    }
  }
}

TEST_CASE("subset iteration") {
  std::size_t count = 0;
  std::vector<Index> last;
  for_each_subset(7, 3, [&](std::span<const Index> s) {
    std::vector<Index> cur(s.begin(), s.end());
    if (count) CHECK(last < cur);
    last = cur;
    ++count;
  });
  CHECK(count == 35);
  CHECK(binomial(40, 20) == 137846528820ULL);
}
