// Compiled with -mavx2; only reached after a CPUID check.
#include <immintrin.h>

#include <bit>
#include <cstdint>

#include "kernels_impl.hpp"

namespace toughham::kernels::detail {
namespace {

inline __m256i load(const VertexSet& s) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(s.words().data()));
}

inline void store(VertexSet& s, __m256i v) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(s.words().data()), v);
}

inline bool is_zero(__m256i v) { return _mm256_testz_si256(v, v) != 0; }

// Walks set bits of a register spilled to memory; avoids a VertexSet round trip.
inline __m256i union_bits(std::span<const VertexSet> rows, __m256i members) {
  alignas(32) std::uint64_t w[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(w), members);
  __m256i acc = _mm256_setzero_si256();
  for (int i = 0; i < 4; ++i) {
    std::uint64_t bits = w[i];
    while (bits != 0) {
      int v = i * 64 + std::countr_zero(bits);
      acc = _mm256_or_si256(acc, load(rows[v]));
      bits &= bits - 1;
    }
  }
  return acc;
}

VertexSet union_rows_avx2(std::span<const VertexSet> rows, const VertexSet& members) {
  VertexSet out;
  store(out, union_bits(rows, load(members)));
  return out;
}

int count_components_avx2(std::span<const VertexSet> rows, const VertexSet& alive) {
  __m256i remaining = load(alive);
  int count = 0;
  while (!is_zero(remaining)) {
    alignas(32) std::uint64_t w[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w), remaining);
    int word = 0;
    while (w[word] == 0) ++word;
    std::uint64_t low = w[word] & (~w[word] + 1);
    alignas(32) std::uint64_t seed[4] = {0, 0, 0, 0};
    seed[word] = low;
    __m256i reached = _mm256_load_si256(reinterpret_cast<const __m256i*>(seed));
    __m256i frontier = reached;
    while (!is_zero(frontier)) {
      __m256i grown = _mm256_and_si256(union_bits(rows, frontier), remaining);
      frontier = _mm256_andnot_si256(reached, grown);
      reached = _mm256_or_si256(reached, frontier);
    }
    remaining = _mm256_andnot_si256(reached, remaining);
    ++count;
  }
  return count;
}

void masked_degrees_avx2(std::span<const VertexSet> rows, const VertexSet& mask,
                         std::span<int> out) {
  const __m256i m = load(mask);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    alignas(32) std::uint64_t w[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w), _mm256_and_si256(load(rows[v]), m));
    out[v] = std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
             std::popcount(w[3]);
  }
}

constexpr KernelTable kAvx2{union_rows_avx2, count_components_avx2, masked_degrees_avx2};

}  // namespace

const KernelTable& avx2_table_impl() { return kAvx2; }

}  // namespace toughham::kernels::detail
