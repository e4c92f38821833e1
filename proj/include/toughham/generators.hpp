#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham::gen {

// Vertex labelling conventions are part of each generator's contract.

Graph empty(int n);
Graph complete(int n);
/// 0-1-...-(n-1)-0, n >= 3.
Graph cycle(int n);
/// 0-1-...-(n-1).
Graph path(int n);
/// Parts are consecutive id blocks in the given order.
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// K_{m x 2}: parts {2i, 2i+1}.
Graph cocktail_party(int m);
/// Centre 0, leaves 1..k.
Graph star(int k);
/// Rim cycle 0..k-1, hub k.
Graph wheel(int k);
/// Outer cycle 0-1-2-3-4, spokes i ~ i+5, inner pentagram 5-7-9-6-8-5.
Graph petersen();

/// K2 u 3K1: edge {0,1}, isolated 2, 3, 4.
Graph pattern_k2_3k1();
/// K2 u 2K1: edge {0,1}, isolated 2, 3.
Graph pattern_k2_2k1();
/// K2 u K1: edge {0,1}, isolated 2.
Graph pattern_k2_k1();
/// P4: 0-1-2-3.
Graph pattern_p4();
/// K1 u P3: path 0-1-2, isolated 3.
Graph pattern_k1_p3();

/// Pattern by short name: k2u3k1, k2u2k1, k2uk1, p4, k1up3.
/// Throws std::invalid_argument for an unknown name.
Graph pattern(std::string_view name);
const std::vector<std::string>& pattern_names();

/// Named family with integer parameters, e.g. ("complete", {5}),
/// ("multipartite", {2,2,2}), ("petersen", {}). Throws std::invalid_argument
/// on an unknown family or bad parameters.
Graph family(std::string_view name, const std::vector<int>& params);
const std::vector<std::string>& family_names();

}  // namespace toughham::gen
