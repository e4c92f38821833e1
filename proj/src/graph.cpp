#include "toughham/graph.hpp"

#include <algorithm>
#include <string>

#include "toughham/kernels.hpp"

namespace toughham {
namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxOrder) + "]");
  }
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = std::move(b).build();
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

int Graph::min_degree() const {
  if (rows_.empty()) return 0;
  int best = kMaxOrder;
  for (const auto& r : rows_) best = std::min(best, r.size());
  return best;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  return kernels::active().union_rows(rows_, s);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

bool Graph::is_complete() const {
  const int n = order();
  for (int v = 0; v < n; ++v) {
    if (rows_[v].size() != n - 1) return false;
  }
  return true;
}

Graph Graph::complement() const {
  Graph c(order());
  const VertexSet all = vertices();
  for (int v = 0; v < order(); ++v) {
    c.rows_[v] = all - rows_[v];
    c.rows_[v].erase(v);
  }
  return c;
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  rows_.resize(static_cast<std::size_t>(n));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u, order());
  check_vertex(v, order());
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
  return *this;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.rows_ = std::move(rows_);
  return g;
}

bool is_valid_path(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const int> vertices) {
  return vertices.size() >= 3 && is_valid_path(g, vertices) &&
         g.adjacent(vertices.back(), vertices.front());
}

Path::Path(const Graph& g, std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (!is_valid_path(g, vertices_)) throw std::invalid_argument("not a path of the graph");
}

Path Path::reversed() const {
  Path p;
  p.vertices_.assign(vertices_.rbegin(), vertices_.rend());
  return p;
}

OrientedCycle::OrientedCycle(const Graph& g, std::vector<int> vertices)
    : vertices_(std::move(vertices)), position_(static_cast<std::size_t>(g.order()), -1) {
  if (!is_valid_cycle(g, vertices_)) throw std::invalid_argument("not a cycle of the graph");
  for (int i = 0; i < size(); ++i) {
    position_[vertices_[i]] = i;
    members_.insert(vertices_[i]);
  }
}

int OrientedCycle::successor(int v) const {
  int i = position_[v] + 1;
  return vertices_[i == size() ? 0 : i];
}

int OrientedCycle::predecessor(int v) const {
  int i = position_[v];
  return vertices_[i == 0 ? size() - 1 : i - 1];
}

int OrientedCycle::forward_distance(int u, int v) const {
  int d = position_[v] - position_[u];
  return d < 0 ? d + size() : d;
}

std::vector<int> OrientedCycle::forward_segment(int u, int v) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(forward_distance(u, v) + 1));
  for (int x = u;; x = successor(x)) {
    out.push_back(x);
    if (x == v) break;
  }
  return out;
}

std::vector<int> OrientedCycle::backward_segment(int u, int v) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(forward_distance(v, u) + 1));
  for (int x = u;; x = predecessor(x)) {
    out.push_back(x);
    if (x == v) break;
  }
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  VertexSet remaining = alive;
  for (int root = remaining.first(); root >= 0; root = remaining.first()) {
    VertexSet reached{root};
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      frontier = (g.neighborhood(frontier) & remaining) - reached;
      reached |= frontier;
    }
    remaining -= reached;
    out.push_back(reached);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

int component_count(const Graph& g, const VertexSet& alive) {
  return kernels::active().count_components(g.rows(), alive);
}

bool is_connected(const Graph& g) { return component_count(g, g.vertices()) <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!(s - g.vertices()).empty()) {
    throw std::out_of_range("vertex set exceeds graph order " + std::to_string(g.order()));
  }
  InducedSubgraph out;
  out.to_host = s.members();
  const int k = static_cast<int>(out.to_host.size());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) local[out.to_host[i]] = i;
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    (g.neighbors(out.to_host[i]) & s).for_each([&](int w) {
      if (local[w] > i) b.add_edge(i, local[w]);
    });
  }
  out.graph = std::move(b).build();
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, g.vertices() - s);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return std::move(out).build();
}

}  // namespace toughham
