#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "toughham/generators.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"

using namespace toughham;

namespace {

ToughnessValue oracle_value(const Graph& g) {
  auto t = oracle::toughness(oracle::matrix(g));
  return t ? ToughnessValue{false, *t} : ToughnessValue::infinity();
}

}  // namespace

TEST_CASE("toughness fixtures") {
  CHECK(toughness_exact(gen::complete(6)).value == ToughnessValue::infinity());
  CHECK_FALSE(toughness_exact(gen::complete(6)).witness);
  CHECK(toughness_exact(gen::cycle(6)).value.value == Rational(1));
  CHECK(toughness_exact(gen::petersen()).value.value == Rational(4, 3));
  CHECK(toughness_exact(gen::cocktail_party(4)).value.value == Rational(3));
  CHECK(toughness_exact(gen::star(3)).value.value == Rational(1, 3));
  auto d = toughness_exact(Graph(3, {{0, 1}}));
  CHECK(d.value.value == Rational(0));
  CHECK(d.witness == VertexSet());
  CHECK(toughness_exact(gen::cycle(6)).value.to_string() == "1");
  CHECK(ToughnessValue::infinity().to_string() == "inf");
}

TEST_CASE("toughness agrees with brute force") {
  for (const auto& g : support::all_graphs(1, 8)) {
    auto r = toughness_exact(g);
    CHECK(r.value == oracle_value(g));
    if (r.witness && !r.value.infinite) {
      auto c = cut_analysis(g, *r.witness);
      if (is_connected(g)) {
        CHECK(c.is_cut_set);
        CHECK(c.ratio == r.value.value);
      }
    }
  }
}

TEST_CASE("tough set is smallest then lexicographically first") {
  // C6: every antipodal-free pair... candidates of size 2 with 2 parts.
  CHECK(tough_set(gen::cycle(6)) == VertexSet{0, 2});
  CHECK(tough_set(gen::star(3)) == VertexSet{0});
  CHECK_THROWS(tough_set(gen::complete(4)));
  CHECK_THROWS(tough_set(Graph(2)));
}

TEST_CASE("t-toughness decisions") {
  CHECK(is_t_tough(gen::cycle(6), Rational(1)).tough);
  auto no = is_t_tough(gen::cycle(6), Rational(3, 2));
  CHECK_FALSE(no.tough);
  REQUIRE(no.violation);
  auto c = cut_analysis(gen::cycle(6), *no.violation);
  CHECK(Rational(3, 2) * Rational(static_cast<std::int64_t>(c.parts.size())) >
        Rational(no.violation->size()));
  CHECK(is_t_tough(gen::complete(5), Rational(100)).tough);
  CHECK(is_t_tough(Graph(3), Rational(0)).tough);
  CHECK_FALSE(is_t_tough(Graph(3), Rational(1, 10)).tough);
  CHECK_THROWS_AS(is_t_tough(gen::cycle(5), Rational(-1)), std::invalid_argument);

  for (const auto& g : support::all_graphs(2, 7)) {
    const auto tau = oracle_value(g);
    for (Rational t : {Rational(1, 2), Rational(1), Rational(4, 3), Rational(2), Rational(3)}) {
      const bool expect = tau.infinite || tau.value >= t;
      CHECK(is_t_tough(g, t).tough == expect);
    }
  }
}

TEST_CASE("toughness on random order-10 graphs") {
  for (std::uint64_t seed = 1000; seed < 1030; ++seed) {
    Graph g = random_graph(10, Rational(1, 2), seed);
    CHECK(toughness_exact(g).value == oracle_value(g));
  }
}
