#include <doctest.h>

#include "support.hpp"
#include "toughham/extension.hpp"
#include "toughham/generators.hpp"
#include "toughham/hamilton.hpp"

using namespace toughham;

namespace {

int witness(const RuleWitness& w, const std::string& name) {
  for (const auto& [k, v] : w)
    if (k == name) return v;
  return -1;
}

void check_growth(const Graph& g, const OrientedCycle& c, const ExtensionOutcome& out) {
  REQUIRE(out.new_cycle);
  CHECK(is_valid_cycle(g, out.new_cycle->vertices()));
  CHECK(out.new_cycle->size() > c.size());
  CHECK(c.vertex_set().is_subset_of(out.new_cycle->vertex_set()));
}

}  // namespace

TEST_CASE("R1 splices an outside vertex between consecutive attachments") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
  OrientedCycle c(g, {0, 1, 2, 3});
  auto out = extend_once(g, c);
  CHECK(out.extended);
  CHECK(out.rule == Rule::kR1);
  REQUIRE(out.new_cycle);
  CHECK(out.new_cycle->vertices() == std::vector<int>{0, 4, 1, 2, 3});
  CHECK(witness(out.witness, "h1") == 4);
  CHECK(witness(out.witness, "h2") == 4);
  auto r3 = try_rule(g, c, Rule::kR3);
  CHECK(r3.extended);
  check_growth(g, c, r3);
}

TEST_CASE("R2 uses adjacent successors") {
  Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 3}, {1, 4}});
  OrientedCycle c(g, {0, 1, 2, 3, 4, 5});
  auto out = extend_once(g, c);
  CHECK(out.extended);
  CHECK(out.rule == Rule::kR2);
  REQUIRE(out.new_cycle);
  CHECK(out.new_cycle->vertices() == std::vector<int>{0, 6, 3, 2, 1, 4, 5});
}

TEST_CASE("single attachment blocks every rule") {
  GraphBuilder b(7);
  for (int i = 0; i < 6; ++i) b.add_edge(i, (i + 1) % 6);
  b.add_edge(6, 2);
  Graph g = std::move(b).build();
  OrientedCycle c(g, {0, 1, 2, 3, 4, 5});
  CHECK_FALSE(extend_once(g, c).extended);
}

TEST_CASE("R4 and R5 constructions are valid when they fire") {
  // H = {8} attached to w = 0 and z = 3 on an 8-cycle, with chords that make
  // the Claim-4 moves available.
  GraphBuilder b(9);
  for (int i = 0; i < 8; ++i) b.add_edge(i, (i + 1) % 8);
  b.add_edge(8, 0).add_edge(8, 3).add_edge(1, 5).add_edge(4, 6);
  Graph g = std::move(b).build();
  OrientedCycle c(g, {0, 1, 2, 3, 4, 5, 6, 7});
  auto r4 = try_rule(g, c, Rule::kR4);
  CHECK(r4.extended);
  check_growth(g, c, r4);
  CHECK(witness(r4.witness, "w") == 0);
  CHECK(witness(r4.witness, "z") == 3);
  CHECK(witness(r4.witness, "w1") == 5);

  GraphBuilder b5(9);
  for (int i = 0; i < 8; ++i) b5.add_edge(i, (i + 1) % 8);
  b5.add_edge(8, 0).add_edge(8, 5).add_edge(1, 3).add_edge(6, 2);
  Graph g5 = std::move(b5).build();
  OrientedCycle c5(g5, {0, 1, 2, 3, 4, 5, 6, 7});
  auto r5 = try_rule(g5, c5, Rule::kR5);
  CHECK(r5.extended);
  check_growth(g5, c5, r5);
  CHECK(witness(r5.witness, "w1") == 3);
}

TEST_CASE("extension errors") {
  Graph k4 = gen::complete(4);
  CHECK_THROWS_AS(extend_once(k4, OrientedCycle(k4, {0, 1, 2, 3})), std::invalid_argument);
  Graph c4 = gen::cycle(4);
  Graph k5 = gen::complete(5);
  CHECK_THROWS_AS(extend_once(c4, OrientedCycle(k5, {0, 2, 1})), std::invalid_argument);
}

TEST_CASE("fixpoint from a triangle of K6") {
  Graph k6 = gen::complete(6);
  auto r = extend_to_fixpoint(k6, OrientedCycle(k6, {0, 1, 2}));
  CHECK(r.cycle.size() == 6);
  CHECK(r.steps.size() <= 3);
  for (const auto& s : r.steps) CHECK(s.new_length > s.old_length);
  auto same = extend_to_fixpoint(k6, OrientedCycle(k6, {0, 1, 2, 3, 4, 5}));
  CHECK(same.steps.empty());
  CHECK(same.cycle.vertices() == std::vector<int>{0, 1, 2, 3, 4, 5});

  Graph pet = gen::petersen();
  auto lc = longest_cycle(pet);
  auto fp = extend_to_fixpoint(pet, lc.cycle);
  CHECK(fp.cycle.size() >= 9);
  CHECK(is_valid_cycle(pet, fp.cycle.vertices()));
}

TEST_CASE("every fired rule grows the cycle") {
  for (const auto& g : support::all_graphs(4, 7, true)) {
    auto start = greedy_cycle(g);
    if (!start || start->size() == g.order()) continue;
    for (Rule r : {Rule::kR1, Rule::kR2, Rule::kR3, Rule::kR4, Rule::kR5}) {
      auto out = try_rule(g, *start, r);
      if (out.extended) check_growth(g, *start, out);
    }
    auto fp = extend_to_fixpoint(g, *start);
    CHECK(fp.steps.size() <= static_cast<std::size_t>(g.order() - start->size()));
  }
}

TEST_CASE("cycle through one component") {
  Graph k5 = gen::complete(5);
  auto c = build_cycle_one_component(k5, 4, {0, 1, 2, 3});
  CHECK(c.size() == 5);
  CHECK(c.contains(4));
  CHECK_THROWS_AS(build_cycle_one_component(gen::wheel(5), 0, {5}), std::invalid_argument);
  CHECK_THROWS_AS(build_cycle_one_component(k5, 0, {0, 1}), std::invalid_argument);
  // d = {1, 2, 3} induces a path, which is not hamiltonian-connected.
  Graph w = gen::wheel(5);
  CHECK_THROWS_AS(build_cycle_one_component(w, 5, {1, 2, 3}), std::invalid_argument);
  auto wc = build_cycle_one_component(w, 0, {5, 2});
  CHECK(wc.size() >= 2 + 1);
  CHECK(wc.vertex_set().contains(5));
}

TEST_CASE("cycle through two components") {
  // Two triangles joined by the edges 0-3 and 1-4.
  Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}});
  auto c = build_cycle_two_components(g, {0, 1, 2}, {3, 4, 5});
  CHECK(c.size() == 6);
  Graph k6 = gen::complete(6);
  auto d = build_cycle_two_components(k6, {0, 1}, {2, 3});
  CHECK(d.size() >= 4);
  CHECK(VertexSet{0, 1, 2, 3}.is_subset_of(d.vertex_set()));
  CHECK_THROWS_AS(build_cycle_two_components(k6, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("greedy cycle") {
  CHECK_FALSE(greedy_cycle(gen::path(6)));
  auto c = greedy_cycle(gen::petersen());
  REQUIRE(c);
  CHECK(is_valid_cycle(gen::petersen(), c->vertices()));
}
