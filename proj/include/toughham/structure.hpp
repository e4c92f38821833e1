#pragma once

#include <optional>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

/// Injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency.
struct PatternEmbedding {
  /// mapping[p] is the host vertex for pattern vertex p.
  std::vector<int> mapping;
};

bool is_induced_embedding(const Graph& pattern, const Graph& host, const PatternEmbedding& e);

/// First induced copy of pattern in host. Pattern vertices are placed in
/// descending degree order (ties by id); host candidates are tried in
/// ascending id order.
std::optional<PatternEmbedding> find_induced(const Graph& pattern, const Graph& host);

inline bool is_free(const Graph& host, const Graph& pattern) {
  return !find_induced(pattern, host).has_value();
}

struct IndependenceResult {
  int size = 0;
  VertexSet witness;
};

/// Exact alpha(g) by branch and bound over the complement with greedy
/// colouring bounds.
IndependenceResult independence_number(const Graph& g);
/// alpha(g[alive]).
int independence_number_within(const Graph& g, const VertexSet& alive);

/// Maximum number of internally disjoint s-t paths for non-adjacent s, t,
/// stopping early once `cap` paths are found.
int local_connectivity(const Graph& g, int s, int t, int cap);

/// kappa(g): minimum vertex-cut size; n-1 for complete graphs, 0 when
/// disconnected.
int vertex_connectivity(const Graph& g);

struct CutAnalysis {
  VertexSet cut;
  std::vector<VertexSet> parts;
  /// |cut| / parts.size()
  Rational ratio;
  /// parts.size() >= 2
  bool is_cut_set = false;
};

/// Throws std::invalid_argument if s = V(g), std::out_of_range if s leaves the
/// vertex range.
CutAnalysis cut_analysis(const Graph& g, const VertexSet& s);

}  // namespace toughham
