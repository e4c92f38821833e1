#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "toughham/generators.hpp"
#include "toughham/structure.hpp"

using namespace toughham;

TEST_CASE("induced pattern search on fixtures") {
  auto e = find_induced(gen::pattern_k2_3k1(), gen::path(8));
  REQUIRE(e);
  CHECK(e->mapping == std::vector<int>{0, 1, 3, 5, 7});
  CHECK(is_induced_embedding(gen::pattern_k2_3k1(), gen::path(8), *e));
  CHECK(is_free(gen::cocktail_party(4), gen::pattern_k2_3k1()));
  CHECK(is_free(gen::complete(6), gen::pattern_p4()));
  CHECK_FALSE(is_free(gen::cycle(5), gen::pattern_k2_k1()));
  CHECK(is_free(gen::complete_multipartite({2, 2, 2}), gen::pattern_k2_k1()));
  CHECK(is_free(gen::complete(3), gen::pattern_k2_3k1()));
}

TEST_CASE("induced pattern search agrees with brute force") {
  const auto graphs = support::all_graphs(1, 7);
  for (const auto& name : gen::pattern_names()) {
    const Graph p = gen::pattern(name);
    const auto pm = oracle::matrix(p);
    for (const auto& g : graphs) {
      auto e = find_induced(p, g);
      CHECK(e.has_value() == oracle::contains_induced(oracle::matrix(g), pm));
      if (e) CHECK(is_induced_embedding(p, g, *e));
    }
  }
}

TEST_CASE("independence number agrees with brute force") {
  CHECK(independence_number(gen::petersen()).size == 4);
  CHECK(independence_number(Graph(0)).size == 0);
  for (const auto& g : support::all_graphs(1, 8)) {
    auto r = independence_number(g);
    CHECK(r.size == oracle::alpha(oracle::matrix(g)));
    CHECK(r.witness.size() == r.size);
    r.witness.for_each([&](int v) { CHECK_FALSE(g.neighbors(v).intersects(r.witness)); });
  }
}

TEST_CASE("vertex connectivity agrees with brute force") {
  CHECK(vertex_connectivity(gen::cocktail_party(4)) == 6);
  CHECK(vertex_connectivity(gen::petersen()) == 3);
  CHECK(vertex_connectivity(gen::complete(5)) == 4);
  CHECK(vertex_connectivity(Graph(3)) == 0);
  for (const auto& g : support::all_graphs(1, 8)) {
    CHECK(vertex_connectivity(g) == oracle::connectivity(oracle::matrix(g)));
  }
}

TEST_CASE("cut analysis") {
  auto c = cut_analysis(gen::cycle(4), VertexSet{0, 2});
  CHECK(c.is_cut_set);
  CHECK(c.parts.size() == 2);
  CHECK(c.ratio == Rational(1));
  auto n = cut_analysis(gen::cycle(4), VertexSet{0});
  CHECK_FALSE(n.is_cut_set);
  CHECK_THROWS_AS(cut_analysis(gen::cycle(4), VertexSet{0, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cut_analysis(gen::cycle(4), VertexSet{9}), std::out_of_range);
}
