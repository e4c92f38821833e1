#pragma once

#include <span>
#include <string_view>

#include "toughham/vertex_set.hpp"

namespace toughham::kernels {

// Bulk bitset primitives over adjacency rows. Each has a scalar reference
// implementation and, on x86-64, an AVX2 variant. The variant is chosen once
// at startup from CPUID; TOUGHHAM_KERNELS=scalar forces the reference path.

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  /// OR of rows[v] over v in members.
  VertexSet (*union_rows)(std::span<const VertexSet> rows, const VertexSet& members);
  /// Number of connected components of the subgraph induced on alive.
  int (*count_components)(std::span<const VertexSet> rows, const VertexSet& alive);
  /// out[v] = |rows[v] & mask| for every v < rows.size().
  void (*masked_degrees)(std::span<const VertexSet> rows, const VertexSet& mask,
                         std::span<int> out);
};

const KernelTable& scalar_table();
/// nullptr when the variant was not compiled in.
const KernelTable* avx2_table();

bool isa_supported(Isa isa);
Isa active_isa();
/// Throws std::invalid_argument if the ISA is unsupported on this CPU.
void select_isa(Isa isa);
const KernelTable& active();
std::string_view isa_name(Isa isa);

}  // namespace toughham::kernels
