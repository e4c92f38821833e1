#pragma once

#include "toughham/kernels.hpp"

namespace toughham::kernels::detail {

#if defined(TOUGHHAM_HAVE_AVX2)
const KernelTable& avx2_table_impl();
#endif

}  // namespace toughham::kernels::detail
