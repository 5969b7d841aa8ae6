#include <bit>

#include "pstego/kernels.hpp"

namespace pstego::kernels::detail {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
    return total;
}

NearestWord nearest_word(const std::uint64_t* words, std::size_t n, std::uint64_t target) {
    NearestWord best{0, 65};
    for (std::size_t i = 0; i < n; ++i) {
        const int d = std::popcount(words[i] ^ target);
        if (d < best.distance) best = {i, d};
    }
    return best;
}

void count_positions(const std::uint64_t* words, std::size_t n, std::uint64_t* counts) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint64_t w = words[i]; w != 0; w &= w - 1) ++counts[std::countr_zero(w)];
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{xor_into, popcount, nearest_word, count_positions};
    return t;
}

}  // namespace pstego::kernels::detail
