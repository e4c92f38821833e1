#include "toughham/menger.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "flow.hpp"
#include "toughham/structure.hpp"

namespace toughham {
namespace {

// Vertex-split network: v_in = 2v, v_out = 2v + 1, source 2n, sink 2n + 1.
// Paths may enter X1 only from the source and leave X2 only to the sink, so
// each X1-X2 path meets the sets at its ends alone.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, const VertexSet& x1, const VertexSet& x2)
      : n_(g.order()), net_(2 * g.order() + 2), source_(2 * n_), sink_(2 * n_ + 1) {
    through_.assign(static_cast<std::size_t>(n_), -1);
    source_arc_.assign(static_cast<std::size_t>(n_), -1);
    sink_arc_.assign(static_cast<std::size_t>(n_), -1);
    x1.for_each([&](int v) { source_arc_[v] = net_.add_arc(source_, 2 * v, 1); });
    for (int v = 0; v < n_; ++v) through_[v] = net_.add_arc(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < n_; ++u) {
      if (x2.contains(u)) continue;
      g.neighbors(u).for_each([&](int v) {
        if (!x1.contains(v)) net_.add_arc(2 * u + 1, 2 * v, 1);
      });
    }
    x2.for_each([&](int v) { sink_arc_[v] = net_.add_arc(2 * v + 1, sink_, 1); });
  }

  // Lets every member of s carry up to cap paths on the given side.
  void widen(const VertexSet& s, bool source_side, int cap) {
    s.for_each([&](int v) {
      net_.set_capacity(source_side ? source_arc_[v] : sink_arc_[v], cap);
      net_.set_capacity(through_[v], cap);
    });
  }

  int augment(int limit) { return net_.augment(source_, sink_, limit); }

  std::vector<std::vector<int>> decompose() const {
    std::vector<std::vector<int>> paths;
    // Remaining flow per forward arc, indexed by arc id.
    std::vector<int> flow_left;
    for (int node = 0; node < 2 * n_ + 2; ++node) {
      for (int a : net_.arcs_from(node)) {
        if (!net_.is_forward(a)) continue;
        if (static_cast<int>(flow_left.size()) <= a) {
          flow_left.resize(static_cast<std::size_t>(a) + 1, 0);
        }
        flow_left[a] = std::max(0, net_.flow_on(a));
      }
    }
    auto take = [&](int node) {
      for (int a : net_.arcs_from(node)) {
        if (net_.is_forward(a) && flow_left[a] > 0) {
          --flow_left[a];
          return net_.arc_target(a);
        }
      }
      throw std::logic_error("flow decomposition lost conservation");
    };
    for (int v = 0; v < n_; ++v) {
      if (source_arc_[v] < 0) continue;
      while (flow_left[source_arc_[v]] > 0) {
        --flow_left[source_arc_[v]];
        std::vector<int> path;
        int node = 2 * v;
        while (node != sink_) {
          path.push_back(node / 2);
          node = take(node);  // v_in -> v_out
          node = take(node);  // v_out -> next v_in, or sink
        }
        paths.push_back(std::move(path));
      }
    }
    return paths;
  }

 private:
  int n_;
  detail::FlowNetwork net_;
  int source_;
  int sink_;
  std::vector<int> through_;
  std::vector<int> source_arc_;
  std::vector<int> sink_arc_;
};

void check_sets(const Graph& g, const VertexSet& x1, const VertexSet& x2) {
  if (x1.empty() || x2.empty()) throw std::invalid_argument("endpoint sets must be nonempty");
  if (!(x1 - g.vertices()).empty() || !(x2 - g.vertices()).empty()) {
    throw std::out_of_range("endpoint set exceeds graph order");
  }
  if (x1 == x2) throw std::invalid_argument("endpoint sets must be distinct");
}

}  // namespace

DisjointPathsResult disjoint_paths(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                                   int k) {
  check_sets(g, x1, x2);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int kappa = vertex_connectivity(g);
  if (kappa < k) {
    throw std::invalid_argument("graph is " + std::to_string(kappa) + "-connected, not " +
                                std::to_string(k) + "-connected");
  }
  const int n1 = x1.size();
  const int n2 = x2.size();
  if (x1.intersects(x2) && (n1 < k || n2 < k)) {
    throw std::invalid_argument("overlapping endpoint sets need at least k vertices each");
  }

  SplitNetwork net(g, x1, x2);
  int flow = net.augment(k);
  // Saturate the smaller side before widening it, then the larger one; flow on
  // source and sink arcs never decreases, so every vertex of a small side
  // keeps at least one path.
  const bool x1_first = n1 <= n2;
  for (bool side : {x1_first, !x1_first}) {
    const int size = side ? n1 : n2;
    if (size < k) {
      net.widen(side ? x1 : x2, side, k);
      flow = net.augment(k);
    }
  }
  if (flow != k) throw std::logic_error("Menger bound violated: found " + std::to_string(flow));

  auto seqs = net.decompose();
  std::sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  DisjointPathsResult out;
  for (auto& s : seqs) {
    out.endpoint_map.emplace_back(s.front(), s.back());
    out.paths.emplace_back(g, std::move(s));
  }
  return out;
}

int max_disjoint_paths(const Graph& g, const VertexSet& x1, const VertexSet& x2) {
  check_sets(g, x1, x2);
  SplitNetwork net(g, x1, x2);
  return net.augment(INT_MAX);
}

std::pair<Path, Path> two_paths_to_component(const Graph& g, int u, const VertexSet& d) {
  if (u < 0 || u >= g.order()) throw std::out_of_range("vertex out of range");
  if (d.contains(u)) throw std::invalid_argument("u must lie outside the component");
  if (d.size() < 2) throw std::invalid_argument("component needs at least two vertices");
  auto r = disjoint_paths(g, VertexSet{u}, d, 2);
  return {r.paths[0], r.paths[1]};
}

}  // namespace toughham
