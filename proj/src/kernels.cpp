#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace toughham::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(TOUGHHAM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  return isa == Isa::kAvx2 ? avx2_table() : &scalar_table();
}

Isa initial_isa() {
  const char* env = std::getenv("TOUGHHAM_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") return Isa::kScalar;
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

struct Selection {
  std::atomic<Isa> isa;
  std::atomic<const KernelTable*> table;
  Selection() : isa(initial_isa()), table(table_for(isa.load())) {}
};

Selection& selection() {
  static Selection s;
  return s;
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(TOUGHHAM_HAVE_AVX2)
  return cpu_has_avx2() ? &detail::avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

bool isa_supported(Isa isa) { return isa == Isa::kScalar || avx2_table() != nullptr; }

Isa active_isa() { return selection().isa.load(); }

void select_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel ISA not supported: " + std::string(isa_name(isa)));
  }
  selection().table.store(table_for(isa));
  selection().isa.store(isa);
}

const KernelTable& active() { return *selection().table.load(std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

}  // namespace toughham::kernels
