#include "kernels_impl.hpp"

namespace toughham::kernels {
namespace {

VertexSet union_rows_scalar(std::span<const VertexSet> rows, const VertexSet& members) {
  VertexSet acc;
  members.for_each([&](int v) { acc |= rows[v]; });
  return acc;
}

int count_components_scalar(std::span<const VertexSet> rows, const VertexSet& alive) {
  VertexSet remaining = alive;
  int count = 0;
  for (int root = remaining.first(); root >= 0; root = remaining.first()) {
    VertexSet reached{root};
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      VertexSet grown = union_rows_scalar(rows, frontier) & remaining;
      frontier = grown - reached;
      reached |= frontier;
    }
    remaining -= reached;
    ++count;
  }
  return count;
}

void masked_degrees_scalar(std::span<const VertexSet> rows, const VertexSet& mask,
                           std::span<int> out) {
  for (std::size_t v = 0; v < rows.size(); ++v) out[v] = (rows[v] & mask).size();
}

constexpr KernelTable kScalar{union_rows_scalar, count_components_scalar,
                              masked_degrees_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace toughham::kernels
