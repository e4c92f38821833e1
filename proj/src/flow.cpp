#include "flow.hpp"

#include <algorithm>
#include <queue>

namespace toughham::detail {

int FlowNetwork::add_arc(int from, int to, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

int FlowNetwork::augment(int source, int sink, int limit) {
  const int nodes = static_cast<int>(out_.size());
  std::vector<int> via(static_cast<std::size_t>(nodes));
  while (total_ < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int u = queue.front();
      queue.pop();
      for (int a : out_[u]) {
        const Arc& arc = arcs_[a];
        if (via[arc.to] == -1 && arc.cap - arc.flow > 0) {
          via[arc.to] = a;
          queue.push(arc.to);
        }
      }
    }
    if (via[sink] == -1) break;
    int push = limit - total_;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      push = std::min(push, arcs_[via[v]].cap - arcs_[via[v]].flow);
    }
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += push;
      arcs_[via[v] ^ 1].flow -= push;
    }
    total_ += push;
  }
  return total_;
}

}  // namespace toughham::detail
