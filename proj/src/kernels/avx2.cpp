// Compiled with -mavx2; nothing here may run before the dispatcher has
// confirmed AVX2 support.

#include <immintrin.h>

#include <bit>

#include "kernels_internal.hpp"

namespace adfbn::kernels::detail {

namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per 256-bit register

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void bit_and(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kLane <= n; i += kLane) store(&dst[i], _mm256_and_si256(load(&a[i]), load(&b[i])));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void bit_or(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kLane <= n; i += kLane) store(&dst[i], _mm256_or_si256(load(&a[i]), load(&b[i])));
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void bit_andnot(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    // _mm256_andnot_si256(x, y) computes ~x & y.
    for (; i + kLane <= n; i += kLane) store(&dst[i], _mm256_andnot_si256(load(&b[i]), load(&a[i])));
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void bit_not(std::span<Word> dst, std::span<const Word> a) {
    const std::size_t n = dst.size();
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + kLane <= n; i += kLane) store(&dst[i], _mm256_xor_si256(load(&a[i]), ones));
    for (; i < n; ++i) dst[i] = ~a[i];
}

void and_equal(std::span<Word> acc, std::span<const Word> a, std::span<const Word> b) {
    const std::size_t n = acc.size();
    std::size_t i = 0;
    for (; i + kLane <= n; i += kLane) {
        const __m256i differ = _mm256_xor_si256(load(&a[i]), load(&b[i]));
        store(&acc[i], _mm256_andnot_si256(differ, load(&acc[i])));
    }
    for (; i < n; ++i) acc[i] &= ~(a[i] ^ b[i]);
}

// Nibble lookup popcount, summed per 64-bit lane with SAD against zero.
std::uint64_t popcount(std::span<const Word> a) {
    const std::size_t n = a.size();
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLane <= n; i += kLane) {
        const __m256i v = load(&a[i]);
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[kLane];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", bit_and, bit_or, bit_andnot, bit_not, and_equal, popcount};
    return table;
}

}  // namespace adfbn::kernels::detail
