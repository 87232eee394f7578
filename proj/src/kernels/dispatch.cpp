#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace adfbn::kernels {

const KernelTable& scalar_kernels() { return detail::scalar_table(); }

const KernelTable* avx2_kernels() {
#if defined(ADFBN_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") != 0;
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active_kernels() {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        const char* forced = std::getenv("ADFBN_KERNELS");
        if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
        const KernelTable* simd = avx2_kernels();
        return simd != nullptr ? *simd : scalar_kernels();
    }();
    return chosen;
}

}  // namespace adfbn::kernels
