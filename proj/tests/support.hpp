#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "toughham/enumeration.hpp"
#include "toughham/graph.hpp"
#include "toughham/graph_io.hpp"

namespace support {

inline toughham::Graph g6(std::string_view s) { return toughham::parse_graph6(s); }

/// Every graph of order lo..hi, one per isomorphism class.
inline std::vector<toughham::Graph> all_graphs(int lo, int hi, bool connected = false) {
  std::vector<toughham::Graph> out;
  for (int n = lo; n <= hi; ++n) {
    auto level = toughham::enumerate_all({n, connected, {}});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline toughham::Graph relabel(const toughham::Graph& g, const std::vector<int>& perm) {
  toughham::GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

inline std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace support
