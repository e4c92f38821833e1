#pragma once

#include <utility>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

struct DisjointPathsResult {
  /// Each path runs from its X1 endpoint to its X2 endpoint.
  std::vector<Path> paths;
  /// endpoints[i] = (front of paths[i] in X1, back of paths[i] in X2).
  std::vector<std::pair<int, int>> endpoint_map;
};

/// k internally disjoint X1-X2 paths in a k-connected graph.
///
/// Every path touches X1 only at its first vertex and X2 only at its last.
/// When |X_i| >= k the k endpoints on X_i are distinct; when |X_i| < k every
/// vertex of X_i is an endpoint and endpoints on that side may be shared.
/// Overlapping sets are accepted only when both have at least k vertices
/// (a shared vertex then forms a one-vertex path).
///
/// Throws std::invalid_argument when g is not k-connected, k < 1, either set
/// is empty, X1 == X2, or the sets overlap while one has fewer than k
/// vertices.
DisjointPathsResult disjoint_paths(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                                   int k);

/// Maximum number of pairwise vertex-disjoint X1-X2 paths (no shared
/// endpoints); equals the minimum X1-X2 separator size.
int max_disjoint_paths(const Graph& g, const VertexSet& x1, const VertexSet& x2);

/// Two paths from u to distinct vertices of d, sharing only u and touching d
/// only at their ends. Requires g 2-connected, u outside d, |d| >= 2.
std::pair<Path, Path> two_paths_to_component(const Graph& g, int u, const VertexSet& d);

}  // namespace toughham
