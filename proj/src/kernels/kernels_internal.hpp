#pragma once

#include "adfbn/kernels/bitset_kernels.hpp"

namespace adfbn::kernels::detail {

const KernelTable& scalar_table();

#if defined(ADFBN_HAVE_AVX2)
/// Only valid to call on CPUs that report AVX2.
const KernelTable& avx2_table();
#endif

}  // namespace adfbn::kernels::detail
