#include <arm_neon.h>

#include <bit>

#include "pstego/kernels.hpp"

namespace pstego::kernels::detail {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

inline uint64x2_t popcount_u64x2(uint64x2_t v) {
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_u64(acc, popcount_u64x2(vld1q_u64(words + i)));
    std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
    return total;
}

NearestWord nearest_word(const std::uint64_t* words, std::size_t n, std::uint64_t target) {
    const uint64x2_t t = vdupq_n_u64(target);
    NearestWord best{0, 65};
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t d = popcount_u64x2(veorq_u64(vld1q_u64(words + i), t));
        const int d0 = static_cast<int>(vgetq_lane_u64(d, 0));
        const int d1 = static_cast<int>(vgetq_lane_u64(d, 1));
        if (d0 < best.distance) best = {i, d0};
        if (d1 < best.distance) best = {i + 1, d1};
    }
    for (; i < n; ++i) {
        const int d = std::popcount(words[i] ^ target);
        if (d < best.distance) best = {i, d};
    }
    return best;
}

void count_positions(const std::uint64_t* words, std::size_t n, std::uint64_t* counts) {
    // no profitable vector form on NEON without wide shuffles; reuse the reference
    scalar_table().count_positions(words, n, counts);
}

}  // namespace

const KernelTable& neon_table() {
    static const KernelTable t{xor_into, popcount, nearest_word, count_positions};
    return t;
}

}  // namespace pstego::kernels::detail
