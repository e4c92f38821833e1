#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "toughham/enumeration.hpp"
#include "toughham/generators.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"

using namespace toughham;

TEST_CASE("small enumeration counts") {
  CHECK(enumerate_all({1, false, {}}).size() == 1);
  CHECK(enumerate_all({3, true, {}}).size() == 2);
  CHECK(enumerate_all({4, true, {}}).size() == 6);
  CHECK(enumerate_all({4, false, {}}).size() == 11);
  CHECK_THROWS_AS(enumerate_all({0, false, {}}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({kMaxEnumerationOrder + 1, false, {}}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({4, false, {"blue"}}), std::invalid_argument);
}

TEST_CASE("no two enumerated graphs are isomorphic") {
  for (int n = 2; n <= 6; ++n) {
    auto graphs = enumerate_all({n, false, {}});
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j)
        CHECK_FALSE(oracle::isomorphic(oracle::matrix(graphs[i]), oracle::matrix(graphs[j])));
  }
}

TEST_CASE("canonical code is a relabelling invariant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxEnumerationOrder);
    Graph g = random_graph(n, Rational(static_cast<int>(rng() % 11), 10), rng());
    Graph h = support::relabel(g, support::shuffled(n, rng));
    CHECK(canonical_code(g) == canonical_code(h));
    Graph canon = graph_from_code(n, canonical_code(g));
    CHECK(oracle::isomorphic(oracle::matrix(g), oracle::matrix(canon)));
    CHECK(canonical_code(canon) == canonical_code(g));
  }
}

TEST_CASE("filters") {
  auto tough = enumerate_all({5, true, {"2-tough"}});
  for (const auto& g : tough) CHECK(is_t_tough(g, Rational(2)).tough);
  auto free = enumerate_all({6, false, {"p4-free", "connected"}});
  for (const auto& g : free) {
    CHECK(is_free(g, gen::pattern_p4()));
    CHECK(is_connected(g));
  }
  CHECK(passes_filter(gen::petersen(), "non-hamiltonian"));
  CHECK(passes_filter(gen::cycle(5), "hamiltonian"));
  CHECK(passes_filter(gen::cycle(5), "1/2-tough"));
  CHECK_FALSE(passes_filter(gen::cycle(5), "3/2-tough"));
  CHECK_THROWS_AS(validate_filter("x-free"), std::invalid_argument);
  CHECK(filter_names().front() == "connected");
}

TEST_CASE("random graphs") {
  CHECK(random_graph(7, Rational(1), 9) == gen::complete(7));
  CHECK(random_graph(7, Rational(0), 9) == Graph(7));
  CHECK(random_graph(10, Rational(1, 2), 42) == random_graph(10, Rational(1, 2), 42));
  CHECK_FALSE(random_graph(10, Rational(1, 2), 42) == random_graph(10, Rational(1, 2), 43));
  CHECK_THROWS_AS(random_graph(4, Rational(3, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(4, Rational(-1, 2), 1), std::invalid_argument);
  // The draw order and threshold rule are part of the contract: at p = 1/2
  // an edge is present iff the word's top bit is clear.
  std::mt19937_64 rng(42);
  GraphBuilder b(10);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if ((rng() >> 63) == 0) b.add_edge(u, v);
  CHECK(random_graph(10, Rational(1, 2), 42) == std::move(b).build());
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
}
