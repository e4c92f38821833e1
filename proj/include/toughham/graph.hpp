#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toughham/vertex_set.hpp"

namespace toughham {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  std::span<const VertexSet> rows() const { return rows_; }
  int degree(int v) const { return rows_[v].size(); }
  /// 0 for the null graph.
  int min_degree() const;

  VertexSet vertices() const { return VertexSet::range(order()); }
  /// Union of the neighbourhoods of the members of s.
  VertexSet neighborhood(const VertexSet& s) const;

  std::vector<Edge> edges() const;
  bool is_complete() const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

/// Accumulates edges, then freezes into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(int u, int v);
  Graph build() &&;
  int order() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<VertexSet> rows_;
};

/// Ordered sequence of distinct vertices with consecutive members adjacent.
class Path {
 public:
  Path() = default;
  /// Throws std::invalid_argument if the sequence is not a path of g.
  Path(const Graph& g, std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  int front() const { return vertices_.front(); }
  int back() const { return vertices_.back(); }
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<int> vertices_;
};

bool is_valid_path(const Graph& g, std::span<const int> vertices);
bool is_valid_cycle(const Graph& g, std::span<const int> vertices);

/// Cycle of length >= 3 with a fixed traversal direction.
///
/// successor(v) is v+ and predecessor(v) is v-; predecessor is the inverse
/// of successor.
class OrientedCycle {
 public:
  OrientedCycle() = default;
  /// Throws std::invalid_argument if the sequence is not a cycle of g.
  OrientedCycle(const Graph& g, std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(position_.size()) && position_[v] >= 0;
  }
  /// Index of v in vertices(); v must be on the cycle.
  int position(int v) const { return position_[v]; }
  int successor(int v) const;
  int predecessor(int v) const;
  VertexSet vertex_set() const { return members_; }

  /// u ->C v: u, u+, ..., v.
  std::vector<int> forward_segment(int u, int v) const;
  /// u <-C v: u, u-, ..., v.
  std::vector<int> backward_segment(int u, int v) const;
  /// Steps needed to walk forward from u to v (0 when u == v).
  int forward_distance(int u, int v) const;

  friend bool operator==(const OrientedCycle& a, const OrientedCycle& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<int> vertices_;
  std::vector<int> position_;
  VertexSet members_;
};

/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of g[alive], ordered by smallest vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive);
/// c(g[alive]); uses the selected bitset kernel.
int component_count(const Graph& g, const VertexSet& alive);
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_host[i] is the host vertex for subgraph vertex i (ascending).
  std::vector<int> to_host;
};

/// g[s]. Throws std::out_of_range if s holds a vertex >= g.order().
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// g - s.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace toughham
