#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

/// Exhaustive generation runs up to this order. Above kSoftEnumerationLimit
/// it is slow (order 9 takes seconds, order 10 minutes).
inline constexpr int kMaxEnumerationOrder = 10;
inline constexpr int kSoftEnumerationLimit = 8;

struct EnumerationSpec {
  int n = 1;
  bool connected_only = false;
  /// Predicate names from filter_names(), all of which must hold.
  std::vector<std::string> filters;
};

/// Canonical code of g (order <= kMaxEnumerationOrder): the graph6 bit
/// string, read as a binary number, of the relabelling that minimises it
/// among orderings by non-decreasing degree. Isomorphic graphs share a code.
std::uint64_t canonical_code(const Graph& g);

/// Graph whose graph6 bit string is `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// Calls fn once per isomorphism class of order spec.n, in increasing code
/// order, each graph in its canonical labelling. fn returns false to stop.
/// Throws std::invalid_argument for n < 1, n > kMaxEnumerationOrder, or an
/// unknown filter.
void enumerate_graphs(const EnumerationSpec& spec, const std::function<bool(const Graph&)>& fn);

std::vector<Graph> enumerate_all(const EnumerationSpec& spec);

/// Registry: "connected", "<pattern>-free" for each pattern name,
/// "<t>-tough" for a rational t, "hamiltonian", "non-hamiltonian".
bool passes_filter(const Graph& g, std::string_view filter);
/// Throws std::invalid_argument for names outside the registry.
void validate_filter(std::string_view filter);
std::vector<std::string> filter_names();

/// G(n, p) sample. A std::mt19937_64 seeded with `seed` draws one 64-bit
/// word x per pair (u, v), u < v, in order (0,1), (0,2), ..., (n-2,n-1); the
/// edge is present iff x * den < num * 2^64. Throws std::invalid_argument
/// unless 0 <= p <= 1.
Graph random_graph(int n, const Rational& p, std::uint64_t seed);

}  // namespace toughham
