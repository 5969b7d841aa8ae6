#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "pstego/kernels.hpp"

namespace pstego::kernels::detail {

namespace {

// Per-byte popcount via nibble lookup, summed into the four 64-bit lanes.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i))));
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
    return total;
}

NearestWord nearest_word(const std::uint64_t* words, std::size_t n, std::uint64_t target) {
    const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target));
    __m256i best_d = _mm256_set1_epi64x(65);
    __m256i best_i = _mm256_setzero_si256();
    __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);
    const __m256i step = _mm256_set1_epi64x(4);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        const __m256i d = popcount_epi64(_mm256_xor_si256(w, t));
        // strict improvement keeps the first index per lane
        const __m256i better = _mm256_cmpgt_epi64(best_d, d);
        best_d = _mm256_blendv_epi8(best_d, d, better);
        best_i = _mm256_blendv_epi8(best_i, idx, better);
        idx = _mm256_add_epi64(idx, step);
    }
    alignas(32) std::int64_t ld[4];
    alignas(32) std::int64_t li[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(ld), best_d);
    _mm256_store_si256(reinterpret_cast<__m256i*>(li), best_i);
    NearestWord best{0, 65};
    for (int l = 0; l < 4; ++l) {
        const int d = static_cast<int>(ld[l]);
        const auto at = static_cast<std::size_t>(li[l]);
        if (d < best.distance || (d == best.distance && at < best.index)) best = {at, d};
    }
    for (; i < n; ++i) {
        const int d = std::popcount(words[i] ^ target);
        if (d < best.distance) best = {i, d};
    }
    return best;
}

// Each word is spread so that byte lane j of `lo` holds bit j (j < 32) and byte
// lane j of `hi` holds bit 32 + j; matching lanes decrement 8-bit counters
// (subtracting 0xff adds one). Counters are flushed before they can wrap.
void count_positions(const std::uint64_t* words, std::size_t n, std::uint64_t* counts) {
    const __m256i spread_lo = _mm256_setr_epi8(0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1,
                                               2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3);
    const __m256i spread_hi = _mm256_setr_epi8(4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5,
                                               6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7);
    const __m256i bitsel = _mm256_set1_epi64x(static_cast<long long>(0x8040201008040201ULL));

    std::size_t i = 0;
    while (i < n) {
        const std::size_t stop = std::min(n, i + 255);
        __m256i acc_lo = _mm256_setzero_si256();
        __m256i acc_hi = _mm256_setzero_si256();
        for (; i < stop; ++i) {
            const __m256i w = _mm256_set1_epi64x(static_cast<long long>(words[i]));
            const __m256i lo = _mm256_and_si256(_mm256_shuffle_epi8(w, spread_lo), bitsel);
            const __m256i hi = _mm256_and_si256(_mm256_shuffle_epi8(w, spread_hi), bitsel);
            acc_lo = _mm256_sub_epi8(acc_lo, _mm256_cmpeq_epi8(lo, bitsel));
            acc_hi = _mm256_sub_epi8(acc_hi, _mm256_cmpeq_epi8(hi, bitsel));
        }
        alignas(32) std::uint8_t blo[32];
        alignas(32) std::uint8_t bhi[32];
        _mm256_store_si256(reinterpret_cast<__m256i*>(blo), acc_lo);
        _mm256_store_si256(reinterpret_cast<__m256i*>(bhi), acc_hi);
        for (int b = 0; b < 32; ++b) {
            counts[b] += blo[b];
            counts[32 + b] += bhi[b];
        }
    }
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{xor_into, popcount, nearest_word, count_positions};
    return t;
}

}  // namespace pstego::kernels::detail
