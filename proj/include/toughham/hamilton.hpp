#pragma once

#include <optional>

#include "toughham/graph.hpp"

namespace toughham {

/// Exact backtracking search from vertex 0 (lowest-id neighbour first) with
/// connectivity, degree and forced-edge pruning. Absent for n < 3.
std::optional<OrientedCycle> hamiltonian_cycle(const Graph& g);

inline bool is_hamiltonian(const Graph& g) { return hamiltonian_cycle(g).has_value(); }

/// Hamiltonian u-v path. Throws std::invalid_argument for u == v and
/// std::out_of_range for ids outside the graph.
std::optional<Path> hamiltonian_path_between(const Graph& g, int u, int v);

/// Every pair joined by a hamiltonian path. Throws std::invalid_argument for
/// n < 3.
bool is_hamiltonian_connected(const Graph& g);

struct LongestCycleResult {
  OrientedCycle cycle;
  bool exact = true;
  int circumference = 0;
};

/// Exact longest cycle. Among maximum cycles returns the lexicographically
/// smallest sequence that starts at its smallest vertex, which also makes the
/// second vertex smaller than the last. Subset dynamic programming up to 20
/// vertices, plain search beyond. Throws std::invalid_argument for forests.
LongestCycleResult longest_cycle(const Graph& g);

bool has_cycle(const Graph& g);

}  // namespace toughham
