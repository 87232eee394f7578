#include <bit>

#include "kernels_internal.hpp"

namespace adfbn::kernels::detail {

namespace {

void bit_and(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void bit_or(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] | b[i];
}

void bit_andnot(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

void bit_not(std::span<Word> dst, std::span<const Word> a) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ~a[i];
}

void and_equal(std::span<Word> acc, std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= ~(a[i] ^ b[i]);
}

std::uint64_t popcount(std::span<const Word> a) {
    std::uint64_t total = 0;
    for (Word w : a) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", bit_and, bit_or, bit_andnot, bit_not, and_equal, popcount};
    return table;
}

}  // namespace adfbn::kernels::detail
