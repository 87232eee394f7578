#pragma once

// Word-parallel bit-vector kernels behind the truth-table layer. A scalar
// reference table is always available; an AVX2 table is compiled on x86-64
// and selected at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <span>

namespace adfbn::kernels {

using Word = std::uint64_t;

/// All operations work element-wise over equally sized spans; `dst` may
/// alias an input.
struct KernelTable {
    const char* name;
    void (*bit_and)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
    void (*bit_or)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
    /// dst = a & ~b
    void (*bit_andnot)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
    void (*bit_not)(std::span<Word> dst, std::span<const Word> a);
    /// acc &= ~(a ^ b): keeps the positions where `a` and `b` agree.
    void (*and_equal)(std::span<Word> acc, std::span<const Word> a, std::span<const Word> b);
    std::uint64_t (*popcount)(std::span<const Word> a);
};

const KernelTable& scalar_kernels();

/// nullptr when AVX2 support is not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Table used by default: AVX2 when available, unless the ADFBN_KERNELS
/// environment variable is set to `scalar`. Chosen once per process.
const KernelTable& active_kernels();

}  // namespace adfbn::kernels
