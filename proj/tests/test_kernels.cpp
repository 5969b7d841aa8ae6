#include <array>
#include <bit>
#include <random>
#include <vector>

#include "doctest.h"
#include "pstego/kernels.hpp"

using namespace pstego::kernels;

namespace {

std::vector<Backend> available() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
        if (backend_available(b)) out.push_back(b);
    return out;
}

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = rng();
    return w;
}

}  // namespace

TEST_CASE("scalar reference by hand") {
    const auto& k = table(Backend::scalar);
    std::vector<std::uint64_t> a{0b1100, ~0ull, 0};
    const std::vector<std::uint64_t> b{0b1010, 1, 5};
    k.xor_into(a.data(), b.data(), a.size());
    CHECK(a == std::vector<std::uint64_t>{0b0110, ~1ull, 5});
    CHECK(k.popcount(a.data(), a.size()) == 2 + 63 + 2);

    const std::vector<std::uint64_t> words{0b111, 0b100, 0b001, 0b110};
    const auto near = k.nearest_word(words.data(), words.size(), 0b101);
    CHECK(near.distance == 1);
    CHECK(near.index == 0);

    std::array<std::uint64_t, 64> counts{};
    k.count_positions(words.data(), words.size(), counts.data());
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 2);
    CHECK(counts[2] == 3);
    CHECK(counts[3] == 0);
}

TEST_CASE("scalar backend is always available") {
    CHECK(backend_available(Backend::scalar));
    CHECK(backend_name(Backend::scalar) == "scalar");
    CHECK(backend_available(active_backend()));
}

TEST_CASE("every backend matches the scalar reference") {
    const auto& ref = table(Backend::scalar);
    std::mt19937_64 rng(11);
    for (Backend b : available()) {
        CAPTURE(backend_name(b));
        const auto& k = table(b);
        for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257, 1000}) {
            CAPTURE(n);
            const auto src = random_words(rng, n);
            auto d1 = random_words(rng, n);
            auto d2 = d1;
            ref.xor_into(d1.data(), src.data(), n);
            k.xor_into(d2.data(), src.data(), n);
            CHECK(d1 == d2);
            CHECK(ref.popcount(src.data(), n) == k.popcount(src.data(), n));

            std::array<std::uint64_t, 64> c1{};
            std::array<std::uint64_t, 64> c2{};
            ref.count_positions(src.data(), n, c1.data());
            k.count_positions(src.data(), n, c2.data());
            CHECK(c1 == c2);

            if (n == 0) continue;
            // narrow words make ties common
            auto narrow = src;
            for (auto& w : narrow) w &= 0xff;
            for (int trial = 0; trial < 20; ++trial) {
                const std::uint64_t target = rng() & 0xff;
                const auto a = ref.nearest_word(narrow.data(), n, target);
                const auto z = k.nearest_word(narrow.data(), n, target);
                CHECK(a.index == z.index);
                CHECK(a.distance == z.distance);
                const auto full = rng();
                CHECK(ref.nearest_word(src.data(), n, full).index == k.nearest_word(src.data(), n, full).index);
            }
        }
    }
}

TEST_CASE("nearest word picks the first minimizer") {
    std::vector<std::uint64_t> words(37, 0b1111);
    words[20] = 0b0111;
    words[30] = 0b1011;
    for (Backend b : available()) {
        const auto near = table(b).nearest_word(words.data(), words.size(), 0);
        CHECK(near.index == 20);
        CHECK(near.distance == 3);
    }
}

TEST_CASE("count positions accumulates") {
    const std::vector<std::uint64_t> words{~0ull, 1ull << 63};
    for (Backend b : available()) {
        std::array<std::uint64_t, 64> counts{};
        counts[5] = 10;
        table(b).count_positions(words.data(), words.size(), counts.data());
        CHECK(counts[5] == 11);
        CHECK(counts[63] == 2);
        CHECK(counts[0] == 1);
    }
}

TEST_CASE("selecting a backend routes the free functions") {
    const Backend before = active_backend();
    select_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    std::vector<std::uint64_t> w{3, 5};
    CHECK(popcount(w) == 4);
    select_backend(before);
    CHECK(active_backend() == before);
}
