#include "toughham/structure.hpp"

#include <algorithm>
#include <numeric>

#include "flow.hpp"

namespace toughham {
namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), order_(static_cast<std::size_t>(pattern.order())) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    mapping_.assign(order_.size(), -1);
  }

  std::optional<PatternEmbedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (!extend(0, VertexSet())) return std::nullopt;
    return PatternEmbedding{mapping_};
  }

 private:
  bool extend(std::size_t depth, const VertexSet& used) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    VertexSet cand = host_.vertices() - used;
    for (std::size_t j = 0; j < depth; ++j) {
      const int q = order_[j];
      const VertexSet& row = host_.neighbors(mapping_[q]);
      if (pattern_.adjacent(p, q)) {
        cand &= row;
      } else {
        cand -= row;
      }
    }
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      mapping_[p] = v;
      VertexSet next = used;
      next.insert(v);
      if (extend(depth + 1, next)) return true;
    }
    mapping_[p] = -1;
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<int> order_;
  std::vector<int> mapping_;
};

// Maximum clique in the complement, i.e. maximum independent set of g.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const VertexSet& alive) : g_(g), alive_(alive) {}

  IndependenceResult run() {
    expand(alive_, VertexSet(), 0);
    return best_;
  }

 private:
  // Greedy colouring of the complement restricted to p: each colour class is
  // a clique of g, so at most one member joins any independent set.
  void colour(const VertexSet& p, std::vector<int>& order, std::vector<int>& bound) const {
    VertexSet uncoloured = p;
    int colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet avail = uncoloured;
      while (!avail.empty()) {
        int v = avail.first();
        avail.erase(v);
        // v's class may only hold neighbours of v in g.
        avail &= g_.neighbors(v);
        uncoloured.erase(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(VertexSet p, const VertexSet& current, int size) {
    std::vector<int> order;
    std::vector<int> bound;
    colour(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_.size) return;
      const int v = order[i];
      VertexSet next = current;
      next.insert(v);
      VertexSet q = p - g_.neighbors(v);
      q.erase(v);
      if (q.empty()) {
        if (size + 1 > best_.size) {
          best_.size = size + 1;
          best_.witness = next;
        }
      } else {
        expand(q, next, size + 1);
      }
      p.erase(v);
    }
  }

  const Graph& g_;
  VertexSet alive_;
  IndependenceResult best_;
};

}  // namespace

bool is_induced_embedding(const Graph& pattern, const Graph& host, const PatternEmbedding& e) {
  if (static_cast<int>(e.mapping.size()) != pattern.order()) return false;
  VertexSet seen;
  for (int v : e.mapping) {
    if (v < 0 || v >= host.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int a = 0; a < pattern.order(); ++a)
    for (int b = a + 1; b < pattern.order(); ++b)
      if (pattern.adjacent(a, b) != host.adjacent(e.mapping[a], e.mapping[b])) return false;
  return true;
}

std::optional<PatternEmbedding> find_induced(const Graph& pattern, const Graph& host) {
  return InducedSearch(pattern, host).run();
}

IndependenceResult independence_number(const Graph& g) {
  return IndependentSetSearch(g, g.vertices()).run();
}

int independence_number_within(const Graph& g, const VertexSet& alive) {
  return IndependentSetSearch(g, alive).run().size;
}

int local_connectivity(const Graph& g, int s, int t, int cap) {
  const int n = g.order();
  // v_in = 2v, v_out = 2v + 1.
  detail::FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (int u = 0; u < n; ++u) {
    g.neighbors(u).for_each([&](int v) { net.add_arc(2 * u + 1, 2 * v, 1); });
  }
  return net.augment(2 * s + 1, 2 * t, cap);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return std::max(0, n - 1);
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  // Some vertex among the first best+1 avoids a minimum separator.
  for (int i = 0; i < n && i <= best; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_connectivity(g, i, j, best));
    }
  }
  return best;
}

CutAnalysis cut_analysis(const Graph& g, const VertexSet& s) {
  if (!(s - g.vertices()).empty()) throw std::out_of_range("cut set exceeds graph order");
  if (s == g.vertices()) throw std::invalid_argument("cut set must be a proper subset of V(G)");
  CutAnalysis out;
  out.cut = s;
  out.parts = components_within(g, g.vertices() - s);
  out.ratio = Rational(s.size(), static_cast<std::int64_t>(out.parts.size()));
  out.is_cut_set = out.parts.size() >= 2;
  return out;
}

}  // namespace toughham
