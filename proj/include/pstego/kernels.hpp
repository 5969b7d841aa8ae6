#pragma once

// Word-level GF(2) kernels. Every backend computes bit-identical results;
// the scalar backend is the reference and the others are tested against it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pstego::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

struct NearestWord {
    std::size_t index = 0;  // first index attaining the minimum
    int distance = 0;
};

struct KernelTable {
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);
    NearestWord (*nearest_word)(const std::uint64_t* words, std::size_t n, std::uint64_t target);
    // counts[b] += number of words with bit b set, b in [0, 64)
    void (*count_positions)(const std::uint64_t* words, std::size_t n, std::uint64_t* counts);
};

bool backend_available(Backend b);
const KernelTable& table(Backend b);

/// Backend used by the free functions below. Chosen once from CPU features;
/// PSTEGO_SIMD=scalar in the environment forces the reference path.
Backend active_backend();
void select_backend(Backend b);

inline void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    table(active_backend()).xor_into(dst.data(), src.data(), dst.size());
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
    return table(active_backend()).popcount(words.data(), words.size());
}

/// Minimum Hamming distance from `target` over `words` (must be non-empty).
inline NearestWord nearest_word(std::span<const std::uint64_t> words, std::uint64_t target) {
    return table(active_backend()).nearest_word(words.data(), words.size(), target);
}

inline void count_positions(std::span<const std::uint64_t> words, std::span<std::uint64_t, 64> counts) {
    table(active_backend()).count_positions(words.data(), words.size(), counts.data());
}

namespace detail {
const KernelTable& scalar_table();
#if defined(PSTEGO_WITH_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(PSTEGO_WITH_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

}  // namespace pstego::kernels
