#pragma once

#include <vector>

namespace toughham::detail {

/// Integer max-flow by shortest augmenting paths. Arcs out of a node are
/// scanned in insertion order, so callers control tie-breaking by adding
/// arcs in ascending target order.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, int capacity);
  void set_capacity(int arc, int capacity) { arcs_[arc].cap = capacity; }
  int flow_on(int arc) const { return arcs_[arc].flow; }
  int arc_target(int arc) const { return arcs_[arc].to; }
  const std::vector<int>& arcs_from(int node) const { return out_[node]; }
  /// True for arcs created by add_arc, false for their residual twins.
  bool is_forward(int arc) const { return arc % 2 == 0; }

  /// Augments until no path remains or the total reaches `limit`; returns the
  /// total flow value (including flow from earlier calls).
  int augment(int source, int sink, int limit);

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  int total_ = 0;
};

}  // namespace toughham::detail
