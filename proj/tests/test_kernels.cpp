#include <doctest.h>

#include <random>

#include "toughham/enumeration.hpp"
#include "toughham/kernels.hpp"

using namespace toughham;

namespace {

VertexSet random_set(std::mt19937_64& rng, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (rng() & 1) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
  const auto* avx = kernels::avx2_table();
  if (avx == nullptr || !kernels::isa_supported(kernels::Isa::kAvx2)) {
    MESSAGE("avx2 kernels unavailable on this machine");
    return;
  }
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 256);
    Graph g = random_graph(n, Rational(1 + static_cast<int>(rng() % 20), 100), rng());
    const VertexSet mask = random_set(rng, n);
    CHECK(ref.union_rows(g.rows(), mask) == avx->union_rows(g.rows(), mask));
    CHECK(ref.count_components(g.rows(), mask) == avx->count_components(g.rows(), mask));
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    ref.masked_degrees(g.rows(), mask, a);
    avx->masked_degrees(g.rows(), mask, b);
    CHECK(a == b);
  }
}

TEST_CASE("isa selection") {
  CHECK(kernels::isa_supported(kernels::Isa::kScalar));
  const auto before = kernels::active_isa();
  kernels::select_isa(kernels::Isa::kScalar);
  CHECK(kernels::active_isa() == kernels::Isa::kScalar);
  CHECK(kernels::isa_name(kernels::Isa::kScalar) == "scalar");
  if (kernels::isa_supported(before)) kernels::select_isa(before);
}

TEST_CASE("component counting matches a plain traversal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 60);
    Graph g = random_graph(n, Rational(1, 20), rng());
    const VertexSet alive = random_set(rng, n);
    CHECK(kernels::scalar_table().count_components(g.rows(), alive) ==
          static_cast<int>(components_within(g, alive).size()));
  }
}
