#include "toughham/hamilton.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toughham/kernels.hpp"

namespace toughham {
namespace {

// Shared search for hamiltonian cycles (target < 0, closes at start) and
// hamiltonian paths ending at a fixed target.
class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, int start, int target)
      : g_(g), start_(start), target_(target), degrees_(static_cast<std::size_t>(g.order())) {}

  std::optional<std::vector<int>> run() {
    path_.push_back(start_);
    unvisited_ = g_.vertices();
    unvisited_.erase(start_);
    if (step()) return path_;
    return std::nullopt;
  }

 private:
  bool closing_ok(int end) const {
    return target_ < 0 ? g_.adjacent(end, start_) : end == target_;
  }

  bool step() {
    const int end = path_.back();
    if (unvisited_.empty()) return closing_ok(end);

    // Vertices that may still be a path neighbour of an unvisited vertex.
    VertexSet avail = unvisited_;
    avail.insert(end);
    if (target_ < 0) avail.insert(start_);
    kernels::active().masked_degrees(g_.rows(), avail, degrees_);

    // While the path is the lone start vertex it still has two free edges,
    // so an edge to it does not force the next step.
    const bool end_has_one_slot = path_.size() > 1 || target_ >= 0;
    int forced = -1;
    bool dead = false;
    unvisited_.for_each([&](int w) {
      if (dead) return;
      const bool is_target = (w == target_);
      const int need = is_target ? 1 : 2;
      if (degrees_[w] < need) {
        dead = true;
        return;
      }
      if (end_has_one_slot && degrees_[w] == need && g_.adjacent(w, end)) {
        // Both remaining path edges of w are fixed and one is the edge to end.
        const bool also_closes = target_ < 0 && g_.adjacent(w, start_);
        if ((is_target || also_closes) && unvisited_.size() > 1) {
          dead = true;
        } else if (forced >= 0) {
          dead = true;
        } else {
          forced = w;
        }
      }
    });
    if (dead) return false;

    VertexSet reach_set = unvisited_;
    reach_set.insert(end);
    if (component_count(g_, reach_set) != 1) return false;

    VertexSet next = g_.neighbors(end) & unvisited_;
    if (forced >= 0) next = VertexSet{forced};
    if (target_ >= 0 && unvisited_.size() > 1) next.erase(target_);
    for (int w = next.first(); w >= 0; w = next.next(w)) {
      path_.push_back(w);
      unvisited_.erase(w);
      if (step()) return true;
      unvisited_.insert(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int start_;
  int target_;
  std::vector<int> path_;
  VertexSet unvisited_;
  std::vector<int> degrees_;
};

// Lexicographically first cycle of exactly `length` vertices whose smallest
// vertex is `start`. Optionally memoises dead (visited, end) states.
class CycleOfLength {
 public:
  CycleOfLength(const Graph& g, int start, int length, bool memo)
      : g_(g), start_(start), length_(length) {
    if (memo) dead_.assign(std::size_t{1} << g.order(), 0);
    allowed_ = g.vertices() - VertexSet::range(start + 1);
  }

  std::optional<std::vector<int>> run() {
    path_.assign(1, start_);
    VertexSet visited{start_};
    if (step(visited)) return path_;
    return std::nullopt;
  }

 private:
  bool step(VertexSet& visited) {
    const int end = path_.back();
    const int have = static_cast<int>(path_.size());
    if (have == length_) return g_.adjacent(end, start_);
    const std::uint64_t key = visited.words()[0];
    if (!dead_.empty() && ((dead_[key] >> end) & 1U)) return false;

    const VertexSet open = allowed_ - visited;
    if (open.size() < length_ - have) {
      mark_dead(key, end);
      return false;
    }
    VertexSet next = g_.neighbors(end) & open;
    for (int w = next.first(); w >= 0; w = next.next(w)) {
      path_.push_back(w);
      visited.insert(w);
      bool ok = step(visited);
      visited.erase(w);
      if (ok) return true;
      path_.pop_back();
    }
    mark_dead(key, end);
    return false;
  }

  void mark_dead(std::uint64_t key, int end) {
    if (!dead_.empty()) dead_[key] |= std::uint32_t{1} << end;
  }

  const Graph& g_;
  int start_;
  int length_;
  VertexSet allowed_;
  std::vector<int> path_;
  std::vector<std::uint32_t> dead_;
};

constexpr int kDynamicProgrammingLimit = 20;

// Per smallest vertex s, the longest cycle through s inside {s, ..., n-1},
// from the table of (visited set, end) states reachable by paths from s.
std::vector<int> circumference_by_start(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> rowmask(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rowmask[v] = static_cast<std::uint32_t>(g.neighbors(v).words()[0]);
  std::vector<int> best(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> reach(std::size_t{1} << n);
  for (int s = 0; s < n; ++s) {
    const int free_bits = n - 1 - s;
    const std::uint32_t base = std::uint32_t{1} << s;
    const std::size_t count = std::size_t{1} << free_bits;
    std::fill(reach.begin(), reach.begin() + static_cast<std::ptrdiff_t>(count), 0);
    reach[0] = base;
    for (std::size_t sub = 0; sub < count; ++sub) {
      std::uint32_t ends = reach[sub];
      if (ends == 0) continue;
      const std::uint32_t mask = (static_cast<std::uint32_t>(sub) << (s + 1)) | base;
      const int size = std::popcount(mask);
      if (size >= 3 && (ends & rowmask[s]) != 0 && size > best[s]) best[s] = size;
      while (ends != 0) {
        const int v = std::countr_zero(ends);
        ends &= ends - 1;
        std::uint32_t grow = rowmask[v] & ~mask & ~((base << 1) - 1);
        while (grow != 0) {
          const int w = std::countr_zero(grow);
          grow &= grow - 1;
          reach[sub | (std::size_t{1} << (w - s - 1))] |= std::uint32_t{1} << w;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<OrientedCycle> hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return std::nullopt;
  auto seq = HamiltonSearch(g, 0, -1).run();
  if (!seq) return std::nullopt;
  return OrientedCycle(g, std::move(*seq));
}

std::optional<Path> hamiltonian_path_between(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("path endpoint out of range");
  if (u == v) throw std::invalid_argument("hamiltonian path endpoints must differ");
  if (!is_connected(g)) return std::nullopt;
  auto seq = HamiltonSearch(g, u, v).run();
  if (!seq) return std::nullopt;
  return Path(g, std::move(*seq));
}

bool is_hamiltonian_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("hamiltonian-connectedness needs n >= 3");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!hamiltonian_path_between(g, u, v)) return false;
  return true;
}

bool has_cycle(const Graph& g) {
  return g.edge_count() > g.order() - static_cast<int>(components(g).size());
}

LongestCycleResult longest_cycle(const Graph& g) {
  if (!has_cycle(g)) throw std::invalid_argument("graph has no cycle");
  const int n = g.order();
  if (n <= kDynamicProgrammingLimit) {
    const std::vector<int> per_start = circumference_by_start(g);
    int length = 0;
    for (int c : per_start) length = std::max(length, c);
    for (int s = 0; s < n; ++s) {
      if (per_start[s] != length) continue;
      auto seq = CycleOfLength(g, s, length, true).run();
      if (!seq) throw std::logic_error("longest cycle reconstruction failed");
      return {OrientedCycle(g, std::move(*seq)), true, length};
    }
  }
  for (int length = n; length >= 3; --length) {
    for (int s = 0; s + length <= n; ++s) {
      if (auto seq = CycleOfLength(g, s, length, false).run()) {
        return {OrientedCycle(g, std::move(*seq)), true, length};
      }
    }
  }
  throw std::logic_error("cycle expected but none found");
}

}  // namespace toughham
