#include "toughham/extension.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "toughham/hamilton.hpp"
#include "toughham/menger.hpp"
#include "toughham/structure.hpp"

namespace toughham {
namespace {

OrientedCycle make_cycle(const Graph& g, std::vector<int> seq, Rule rule) {
  if (!is_valid_cycle(g, seq)) {
    throw std::logic_error("rule " + std::string(rule_name(rule)) + " built an invalid cycle");
  }
  return OrientedCycle(g, std::move(seq));
}

void append(std::vector<int>& out, const std::vector<int>& part) {
  out.insert(out.end(), part.begin(), part.end());
}

// Shortest path inside h from `from` to `to`; BFS from `from`, neighbours in
// ascending order, first discovery wins.
std::vector<int> inner_path(const Graph& g, const VertexSet& h, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> queue;
  queue.push(from);
  parent[from] = from;
  while (!queue.empty() && parent[to] < 0) {
    int v = queue.front();
    queue.pop();
    (g.neighbors(v) & h).for_each([&](int w) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push(w);
      }
    });
  }
  std::vector<int> out;
  for (int v = to; v != from; v = parent[v]) out.push_back(v);
  out.push_back(from);
  std::reverse(out.begin(), out.end());
  return out;
}

class RuleScanner {
 public:
  RuleScanner(const Graph& g, const OrientedCycle& c)
      : g_(g), c_(c), on_cycle_(c.vertex_set()) {
    if (!is_valid_cycle(g, c.vertices())) throw std::invalid_argument("cycle is not valid in graph");
    if (c.size() == g.order()) throw std::invalid_argument("cycle already spans the graph");
    outside_ = g.vertices() - on_cycle_;
    parts_ = components_within(g, outside_);
  }

  ExtensionOutcome run(Rule rule) const {
    switch (rule) {
      case Rule::kR1: return scan_components([&](const VertexSet& h) { return r1(h); });
      case Rule::kR2: return scan_components([&](const VertexSet& h) { return r2(h); });
      case Rule::kR3: return r3();
      case Rule::kR4: return scan_components([&](const VertexSet& h) { return r4(h); });
      case Rule::kR5: return scan_components([&](const VertexSet& h) { return r5(h); });
    }
    return {};
  }

 private:
  template <typename Fn>
  ExtensionOutcome scan_components(Fn&& fn) const {
    for (const auto& h : parts_) {
      auto out = fn(h);
      if (out.extended) return out;
    }
    return {};
  }

  VertexSet attachments(const VertexSet& h) const { return g_.neighborhood(h) & on_cycle_; }
  int anchor(int x, const VertexSet& h) const { return (g_.neighbors(x) & h).first(); }

  ExtensionOutcome r1(const VertexSet& h) const {
    const VertexSet att = attachments(h);
    for (int x = att.first(); x >= 0; x = att.next(x)) {
      const int y = c_.successor(x);
      if (!att.contains(y)) continue;
      const int h1 = anchor(x, h);
      const int h2 = anchor(y, h);
      std::vector<int> seq{x};
      append(seq, inner_path(g_, h, h1, h2));
      auto back = c_.forward_segment(y, x);
      back.pop_back();
      append(seq, back);
      return {true, Rule::kR1, make_cycle(g_, std::move(seq), Rule::kR1),
              {{"x", x}, {"y", y}, {"h1", h1}, {"h2", h2}}};
    }
    return {};
  }

  ExtensionOutcome r2(const VertexSet& h) const {
    const VertexSet att = attachments(h);
    for (int x = att.first(); x >= 0; x = att.next(x)) {
      for (int y = att.first(); y >= 0; y = att.next(y)) {
        if (y == x || y == c_.successor(x) || x == c_.successor(y)) continue;
        const int xp = c_.successor(x);
        const int yp = c_.successor(y);
        if (!g_.adjacent(xp, yp)) continue;
        const int h1 = anchor(x, h);
        const int h2 = anchor(y, h);
        std::vector<int> seq{x};
        append(seq, inner_path(g_, h, h1, h2));
        append(seq, c_.backward_segment(y, xp));
        auto tail = c_.forward_segment(yp, x);
        tail.pop_back();
        append(seq, tail);
        return {true, Rule::kR2, make_cycle(g_, std::move(seq), Rule::kR2),
                {{"x", x}, {"y", y}, {"x+", xp}, {"y+", yp}, {"h1", h1}, {"h2", h2}}};
      }
    }
    return {};
  }

  ExtensionOutcome r3() const {
    for (int w = outside_.first(); w >= 0; w = outside_.next(w)) {
      const VertexSet hits = g_.neighbors(w) & on_cycle_;
      for (int u1 = hits.first(); u1 >= 0; u1 = hits.next(u1)) {
        const int u2 = c_.successor(u1);
        if (!hits.contains(u2)) continue;
        std::vector<int> seq{u1, w};
        auto rest = c_.forward_segment(u2, u1);
        rest.pop_back();
        append(seq, rest);
        return {true, Rule::kR3, make_cycle(g_, std::move(seq), Rule::kR3),
                {{"w", w}, {"u1", u1}, {"u2", u2}}};
      }
    }
    return {};
  }

  // Shared loop of the two Claim-4 style moves. `before` selects the cyclic
  // order w, w1, z (R5) instead of w, z, w1 (R4).
  template <typename Build>
  ExtensionOutcome claim4(const VertexSet& h, Rule rule, bool before, Build&& build) const {
    const VertexSet att = attachments(h);
    for (int w = att.first(); w >= 0; w = att.next(w)) {
      const int wp = c_.successor(w);
      const VertexSet w1s = g_.neighbors(wp) & on_cycle_;
      for (int z = att.first(); z >= 0; z = att.next(z)) {
        if (z == w) continue;
        const int zp = c_.successor(z);
        const int dz = c_.forward_distance(w, z);
        for (int w1 = w1s.first(); w1 >= 0; w1 = w1s.next(w1)) {
          if (w1 == w || w1 == z || w1 == wp || w1 == zp) continue;
          const int d1 = c_.forward_distance(w, w1);
          if (before != (d1 < dz)) continue;
          const int partner = before ? c_.predecessor(w1) : c_.successor(w1);
          if (!g_.adjacent(zp, partner)) continue;
          const int h1 = anchor(w, h);
          const int h2 = anchor(z, h);
          std::vector<int> seq = build(w, wp, z, zp, w1);
          append(seq, inner_path(g_, h, h2, h1));
          return {true, rule, make_cycle(g_, std::move(seq), rule),
                  {{"w", w}, {"z", z}, {"w1", w1}, {"h1", h1}, {"h2", h2}}};
        }
      }
    }
    return {};
  }

  ExtensionOutcome r4(const VertexSet& h) const {
    return claim4(h, Rule::kR4, false, [&](int w, int wp, int z, int zp, int w1) {
      std::vector<int> seq = c_.backward_segment(w, c_.successor(w1));
      append(seq, c_.forward_segment(zp, w1));
      append(seq, c_.forward_segment(wp, z));
      return seq;
    });
  }

  ExtensionOutcome r5(const VertexSet& h) const {
    return claim4(h, Rule::kR5, true, [&](int w, int wp, int z, int zp, int w1) {
      std::vector<int> seq = c_.backward_segment(w, zp);
      append(seq, c_.backward_segment(c_.predecessor(w1), wp));
      append(seq, c_.forward_segment(w1, z));
      return seq;
    });
  }

  const Graph& g_;
  const OrientedCycle& c_;
  VertexSet on_cycle_;
  VertexSet outside_;
  std::vector<VertexSet> parts_;
};

VertexSet check_hamiltonian_connected(const Graph& g, const VertexSet& d, const char* name) {
  if (d.size() < 2) throw std::invalid_argument(std::string(name) + " needs at least two vertices");
  auto sub = induced_subgraph(g, d);
  bool ok = d.size() == 2 ? sub.graph.adjacent(0, 1) : is_hamiltonian_connected(sub.graph);
  if (!ok) throw std::invalid_argument(std::string(name) + " does not induce a hamiltonian-connected graph");
  return d;
}

std::vector<int> inner_hamiltonian_path(const Graph& g, const VertexSet& d, int from, int to) {
  auto sub = induced_subgraph(g, d);
  const auto& host = sub.to_host;
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(host.begin(), host.end(), v) - host.begin());
  };
  auto p = hamiltonian_path_between(sub.graph, local(from), local(to));
  if (!p) throw std::logic_error("hamiltonian-connected subgraph lacks a path");
  std::vector<int> out;
  for (int v : p->vertices()) out.push_back(host[v]);
  return out;
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kR1: return "R1";
    case Rule::kR2: return "R2";
    case Rule::kR3: return "R3";
    case Rule::kR4: return "R4";
    case Rule::kR5: return "R5";
  }
  return "?";
}

ExtensionOutcome try_rule(const Graph& g, const OrientedCycle& c, Rule rule) {
  return RuleScanner(g, c).run(rule);
}

ExtensionOutcome extend_once(const Graph& g, const OrientedCycle& c) {
  RuleScanner scanner(g, c);
  for (Rule r : {Rule::kR1, Rule::kR2, Rule::kR3, Rule::kR4, Rule::kR5}) {
    auto out = scanner.run(r);
    if (out.extended) return out;
  }
  return {};
}

FixpointResult extend_to_fixpoint(const Graph& g, const OrientedCycle& c) {
  if (!is_valid_cycle(g, c.vertices())) throw std::invalid_argument("cycle is not valid in graph");
  FixpointResult out{c, {}};
  while (out.cycle.size() < g.order()) {
    auto step = extend_once(g, out.cycle);
    if (!step.extended) break;
    out.steps.push_back({step.rule, step.witness, out.cycle.size(), step.new_cycle->size()});
    out.cycle = std::move(*step.new_cycle);
  }
  return out;
}

OrientedCycle build_cycle_one_component(const Graph& g, int u, const VertexSet& d) {
  if (u < 0 || u >= g.order()) throw std::out_of_range("vertex out of range");
  if (d.contains(u)) throw std::invalid_argument("u must lie outside d");
  check_hamiltonian_connected(g, d, "d");
  auto [p1, p2] = two_paths_to_component(g, u, d);
  const int x1 = p1.back();
  const int x2 = p2.back();
  std::vector<int> seq = p1.vertices();
  auto q = inner_hamiltonian_path(g, d, x1, x2);
  seq.insert(seq.end(), q.begin() + 1, q.end());
  const auto& back = p2.vertices();
  // P2 reversed, without x2 and without the closing u.
  for (int i = p2.size() - 2; i >= 1; --i) seq.push_back(back[i]);
  return OrientedCycle(g, std::move(seq));
}

OrientedCycle build_cycle_two_components(const Graph& g, const VertexSet& d1,
                                         const VertexSet& d2) {
  if (d1.intersects(d2)) throw std::invalid_argument("d1 and d2 must be disjoint");
  check_hamiltonian_connected(g, d1, "d1");
  check_hamiltonian_connected(g, d2, "d2");
  auto r = disjoint_paths(g, d1, d2, 2);
  const Path& p1 = r.paths[0];
  const Path& p2 = r.paths[1];
  const int x1 = p1.front(), x2 = p1.back();
  const int y1 = p2.front(), y2 = p2.back();
  std::vector<int> seq = p1.vertices();
  auto q2 = inner_hamiltonian_path(g, d2, x2, y2);
  seq.insert(seq.end(), q2.begin() + 1, q2.end());
  for (int i = p2.size() - 2; i >= 0; --i) seq.push_back(p2.vertices()[i]);
  auto q1 = inner_hamiltonian_path(g, d1, y1, x1);
  seq.insert(seq.end(), q1.begin() + 1, q1.end() - 1);
  return OrientedCycle(g, std::move(seq));
}

std::optional<OrientedCycle> greedy_cycle(const Graph& g) {
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> walk{s};
    VertexSet seen{s};
    while (true) {
      const int nxt = (g.neighbors(walk.back()) - seen).first();
      if (nxt < 0) break;
      walk.push_back(nxt);
      seen.insert(nxt);
    }
    const int end = walk.back();
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i + 2 < len; ++i) {
      if (g.adjacent(walk[i], end)) {
        return OrientedCycle(g, std::vector<int>(walk.begin() + i, walk.end()));
      }
    }
  }
  return std::nullopt;
}

}  // namespace toughham
