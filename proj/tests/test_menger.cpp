#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "toughham/generators.hpp"
#include "toughham/menger.hpp"
#include "toughham/structure.hpp"

using namespace toughham;

namespace {

std::vector<std::vector<int>> as_lists(const DisjointPathsResult& r) {
  std::vector<std::vector<int>> out;
  for (const auto& p : r.paths) out.push_back(p.vertices());
  return out;
}

oracle::Mask mask_of(const VertexSet& s) { return static_cast<oracle::Mask>(s.words()[0]); }

}  // namespace

TEST_CASE("disjoint path fixtures") {
  CHECK(as_lists(disjoint_paths(gen::complete(4), {0}, {3}, 3)) ==
        std::vector<std::vector<int>>{{0, 3}, {0, 1, 3}, {0, 2, 3}});
  CHECK(as_lists(disjoint_paths(gen::cycle(4), {0}, {2}, 2)) ==
        std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 2}});
  auto two = disjoint_paths(gen::complete(4), {0, 1}, {2, 3}, 2);
  REQUIRE(two.paths.size() == 2);
  CHECK(two.paths[0].size() == 2);
  CHECK(two.paths[1].size() == 2);
  CHECK(two.endpoint_map[0].first != two.endpoint_map[1].first);
  CHECK(two.endpoint_map[0].second != two.endpoint_map[1].second);
}

TEST_CASE("disjoint path errors") {
  CHECK_THROWS_AS(disjoint_paths(gen::cycle(5), {0}, {2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_paths(gen::cycle(5), {0, 1}, {0, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_paths(gen::cycle(5), {}, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_paths(gen::cycle(5), {0}, {2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_paths(gen::cycle(5), {0}, {7}, 1), std::out_of_range);
  CHECK_THROWS_AS(disjoint_paths(gen::cycle(5), {0, 1}, {1}, 2), std::invalid_argument);
}

TEST_CASE("two paths into a component") {
  auto [a, b] = two_paths_to_component(gen::cycle(4), 0, {1, 2, 3});
  CHECK(a.vertices() == std::vector<int>{0, 1});
  CHECK(b.vertices() == std::vector<int>{0, 3});
  auto [c, d] = two_paths_to_component(gen::complete(4), 0, {2, 3});
  CHECK(c.vertices() == std::vector<int>{0, 2});
  CHECK(d.vertices() == std::vector<int>{0, 3});
  CHECK_THROWS_AS(two_paths_to_component(gen::cycle(4), 0, {2}), std::invalid_argument);
}

TEST_CASE("maximum disjoint paths equals the minimum separator") {
  std::mt19937_64 rng(5);
  for (const auto& g : support::all_graphs(2, 6)) {
    const int n = g.order();
    for (int trial = 0; trial < 10; ++trial) {
      VertexSet x1, x2;
      while (x1.empty()) {
        for (int v = 0; v < n; ++v)
          if (rng() % 3 == 0) x1.insert(v);
      }
      while (x2.empty() || x2 == x1) {
        x2 = VertexSet();
        for (int v = 0; v < n; ++v)
          if (rng() % 3 == 0) x2.insert(v);
      }
      CHECK(max_disjoint_paths(g, x1, x2) ==
            oracle::min_separator(oracle::matrix(g), mask_of(x1), mask_of(x2)));
    }
  }
}
