#pragma once

#include <optional>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

/// tau(G): an exact rational, or infinite for complete graphs.
struct ToughnessValue {
  bool infinite = false;
  Rational value;

  static ToughnessValue infinity() { return {true, Rational()}; }
  std::string to_string() const { return infinite ? "inf" : value.to_string(); }
  friend bool operator==(const ToughnessValue&, const ToughnessValue&) = default;
};

struct ToughnessResult {
  ToughnessValue value;
  /// Minimising cut set; empty for disconnected graphs, absent for complete.
  std::optional<VertexSet> witness;
};

/// Exact toughness. Disconnected graphs get tau = 0 with an empty witness.
/// Among minimising cut sets the witness is the smallest, then
/// lexicographically first.
ToughnessResult toughness_exact(const Graph& g);

struct ToughnessDecision {
  bool tough = true;
  /// A violating set S with t * c(G - S) > |S| when tough is false.
  std::optional<VertexSet> violation;
};

/// Whether g is t-tough. Stops at the first violating set (smallest size,
/// then lexicographic). Throws std::invalid_argument for t < 0.
ToughnessDecision is_t_tough(const Graph& g, const Rational& t);

/// The tough set W. Throws std::invalid_argument for complete or
/// disconnected input.
VertexSet tough_set(const Graph& g);

}  // namespace toughham
