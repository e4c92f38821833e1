#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

/// Cycle-lengthening moves, tried in this priority order.
///
///   R1  x, y in N_C(H) with y = x+:        x h1 P h2 y ->C x
///   R2  x, y in N_C(H) with x+ ~ y+:       x h1 P h2 y <-C x+ y+ ->C x
///   R3  outside vertex w ~ u1, u2 = u1+:   u1 w u2 ->C u1
///   R4  w, z in N_C(H), w1 ~ w+, cyclic order w, z, w1, z+ ~ w1+:
///         w <-C w1+ z+ ->C w1 w+ ->C z h2 P h1 w
///   R5  same with order w, w1, z and z+ ~ w1-:
///         w <-C z+ w1- <-C w+ w1 ->C z h2 P h1 w
///
/// H is a component of G - V(C), h1 and h2 are the lowest-id H-neighbours of
/// the two attachments, and P is a shortest h1-h2 path inside H.
enum class Rule { kR1, kR2, kR3, kR4, kR5 };

std::string_view rule_name(Rule r);

/// Named vertices instantiating a rule, e.g. {"x", 0}, {"h1", 4}.
using RuleWitness = std::vector<std::pair<std::string, int>>;

struct ExtensionOutcome {
  bool extended = false;
  Rule rule = Rule::kR1;
  std::optional<OrientedCycle> new_cycle;
  RuleWitness witness;
};

/// First applicable rule over all components H (by smallest vertex) and all
/// instantiations in ascending vertex order. Throws std::invalid_argument if
/// c spans g.
ExtensionOutcome extend_once(const Graph& g, const OrientedCycle& c);

/// Only the given rule.
ExtensionOutcome try_rule(const Graph& g, const OrientedCycle& c, Rule rule);

struct ExtensionStep {
  Rule rule;
  RuleWitness witness;
  int old_length;
  int new_length;
};

struct FixpointResult {
  OrientedCycle cycle;
  std::vector<ExtensionStep> steps;
};

/// Applies extend_once until no rule fires or the cycle is hamiltonian.
FixpointResult extend_to_fixpoint(const Graph& g, const OrientedCycle& c);

/// u P1 x1 Q x2 P2 u: two disjoint u-d paths closed by a hamiltonian x1-x2
/// path of g[d]. Requires u outside d, |d| >= 2, g 2-connected and g[d]
/// hamiltonian-connected (checked).
OrientedCycle build_cycle_one_component(const Graph& g, int u, const VertexSet& d);

/// x1 P1 x2 Q2 y2 P2 y1 Q1 x1: two disjoint d1-d2 paths closed by
/// hamiltonian paths inside g[d1] and g[d2]. Requires disjoint d1, d2 with
/// at least two vertices each, g 2-connected, and both g[d_i]
/// hamiltonian-connected (checked). Length is at least |d1| + |d2|.
OrientedCycle build_cycle_two_components(const Graph& g, const VertexSet& d1,
                                         const VertexSet& d2);

/// A cycle found greedily: start at the lowest vertex on some cycle and walk
/// to the lowest unvisited neighbour, closing at the first chance back to the
/// start. Absent for forests.
std::optional<OrientedCycle> greedy_cycle(const Graph& g);

}  // namespace toughham
