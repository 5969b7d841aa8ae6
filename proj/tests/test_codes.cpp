#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "pstego/bch.hpp"
#include "pstego/code.hpp"
#include "pstego/coset_table.hpp"

using namespace pstego;

namespace {

// Minimum weight per syndrome and the lexicographically smallest (left-to-right
// string) minimizer, by scanning every vector of the ambient space.
struct BruteCosets {
    std::vector<int> weight;
    std::vector<std::string> leader;
};

BruteCosets brute_cosets(const LinearCode& code) {
    const std::size_t n = code.length();
    BruteCosets b;
    b.weight.assign(std::size_t{1} << code.redundancy(), 1 << 20);
    b.leader.assign(b.weight.size(), "");
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        const auto v = BitVector::from_word(y, n);
        const auto s = code.syndrome(v).to_word();
        const int w = std::popcount(y);
        const std::string str = v.to_string();
        if (w < b.weight[s] || (w == b.weight[s] && str < b.leader[s])) {
            b.weight[s] = w;
            b.leader[s] = str;
        }
    }
    return b;
}

}  // namespace

TEST_CASE("Hamming codes") {
    const auto h7 = hamming_code(3);
    CHECK(h7.length() == 7);
    CHECK(h7.dimension() == 4);
    CHECK(h7.parity_check() == BitMatrix::from_strings({"0001111", "0110011", "1010101"}));
    // unit vector e_i reads column i; column c holds c+1 with the top row most significant
    CHECK(h7.syndrome(BitVector::unit(7, 4)) == BitVector::from_string("101"));
    CHECK(h7.syndrome(BitVector::unit(7, 2)) == BitVector::from_string("011"));
    CHECK(h7.syndrome(BitVector(7)).is_zero());
    CHECK(h7.generator().mul_transpose(h7.parity_check()).is_zero());

    const auto h3 = hamming_code(2);
    CHECK(h3.length() == 3);
    CHECK(h3.dimension() == 1);
    CHECK(h3.contains(BitVector::from_string("111")));

    const auto h15 = hamming_code(4);
    CHECK(h15.dimension() == 11);
    CHECK(h15.redundancy() == 4);

    for (int m = 2; m <= 6; ++m) CHECK(covering_radius(hamming_code(m)) == 1);
}

TEST_CASE("code invariants") {
    for (int m = 4; m <= 7; ++m)
        for (int t = 1; t <= 3; ++t) {
            const BchCode bch(m, t);
            const auto& c = bch.code();
            CHECK(c.generator().mul_transpose(c.parity_check()).is_zero());
            CHECK(rank(c.generator()) == c.dimension());
            CHECK(rank(c.parity_check()) == c.redundancy());
            CHECK(c.dimension() + c.redundancy() == c.length());
            // (0, m) placement has the requested syndrome
            BitVector s(c.redundancy());
            for (std::size_t i = 0; i < s.size(); i += 3) s.set(i);
            CHECK(c.syndrome(c.syndrome_preimage(s)) == s);
            CHECK(c.syndrome_word(c.syndrome_preimage_word(5)) == 5);
        }
    CHECK_THROWS(hamming_code(3).syndrome(BitVector(6)));
}

TEST_CASE("syndrome bit j is row j of H and the integer's bit j") {
    const auto code = hamming_code(3);
    for (std::uint64_t y = 0; y < 128; ++y) {
        const auto v = BitVector::from_word(y, 7);
        CHECK(code.syndrome(v).to_word() == code.syndrome_word(v));
    }
    CHECK(code.syndrome_word(BitVector::unit(7, 0)) == 0b100);
}

TEST_CASE("coset leader tables match brute force") {
    std::vector<LinearCode> codes{hamming_code(3), hamming_code(4), BchCode(4, 2).code(), BchCode(4, 3).code()};
    for (const auto& code : codes) {
        const auto table = CosetLeaderTable::build(code);
        const auto brute = brute_cosets(code);
        std::uint64_t total = 0;
        for (auto a : table.weight_distribution()) total += a;
        CHECK(total == table.size());
        for (std::uint64_t s = 0; s < table.size(); ++s) {
            REQUIRE(table.leader_weight(s) == brute.weight[s]);
            REQUIRE(table.leader(s).to_string() == brute.leader[s]);
            REQUIRE(code.syndrome_word(table.leader(s)) == s);
        }
        CHECK(table.average_radius() <= Rational(table.covering_radius()));
    }
}

TEST_CASE("radii and leader weight distributions") {
    const auto h7 = CosetLeaderTable::build(hamming_code(3));
    CHECK(h7.covering_radius() == 1);
    CHECK(h7.weight_distribution() == std::vector<std::uint64_t>{1, 7});
    CHECK(h7.average_radius() == Rational(7, 8));

    const BchCode b42(4, 2);
    CHECK(covering_radius(b42.code()) == 3);
    const BchCode b52(5, 2);
    CHECK(covering_radius(b52.code()) == 3);

    const BchCode b43(4, 3);
    const auto t43 = CosetLeaderTable::build(b43.code());
    CHECK(t43.covering_radius() == 5);
    const auto& a = t43.weight_distribution();
    REQUIRE(a.size() == 6);
    CHECK(a[0] == 1);
    CHECK(a[1] == 15);
    CHECK(a[2] == 105);
    CHECK(a[3] == 455);
    // 2^10 cosets in all; the rest lie beyond the packing radius
    CHECK(a[4] + a[5] == 1024 - 576);
    CHECK(static_cast<double>(t43.average_radius()) == doctest::Approx(3.33).epsilon(0.002));

    const BchCode b53(5, 3);
    const auto t53 = CosetLeaderTable::build(b53.code());
    CHECK(t53.covering_radius() == 5);
    CHECK(static_cast<double>(t53.average_radius()) == doctest::Approx(4.28).epsilon(0.002));
}

TEST_CASE("weights beyond the packing radius stay within the known bounds when r = 3m") {
    const BchCode b53(5, 3);
    const auto a = leader_weight_distribution(b53.code());
    const double n = 31;
    REQUIRE(a.size() == 6);
    for (int j = 0; j <= 3; ++j) CHECK(BigInt(a[static_cast<std::size_t>(j)]) == binomial(31, j));
    CHECK(a[4] + a[5] == (31 * 32 * (5 * 31 + 13)) / 6);
    CHECK(static_cast<double>(a[4]) >= 5 * n * (5 * n + 13) / 6);
    CHECK(static_cast<double>(a[4]) <= n * (5 * n * n + 10 * n - 3) / 6);
    CHECK(static_cast<double>(a[5]) >= 4 * n * (n + 2) / 3);
    CHECK(static_cast<double>(a[5]) <= n * (n - 4) * (5 * n + 13) / 6);
}

TEST_CASE("ball volumes and table sizes") {
    CHECK(ball_volume(2, 3, 1) == 4);
    CHECK(ball_volume(2, 15, 0) == 1);
    CHECK(ball_volume(2, 15, 3) == 576);
    CHECK(ball_volume(3, 4, 1) == 9);
    CHECK(binomial(15, 3) == 455);
    CHECK_THROWS(ball_volume(2, 3, 4));
    CHECK(std::round(syndrome_table_size_mb(31, 15) * 1000) == 1507);
    CHECK(std::round(syndrome_table_size_mb(127, 21) * 1000) == 310378);
    CHECK(syndrome_table_size_mb(0, 0) == 0.0);
}

TEST_CASE("minimum distance and brute-force nearest") {
    CHECK(minimum_distance(hamming_code(3)) == 3);
    CHECK(minimum_distance(BchCode(4, 2).code()) == 5);
    CHECK(minimum_distance(BchCode(4, 3).code()) == 7);
    const auto words = BchCode(4, 3).code().codeword_words();
    CHECK(words.size() == 32);
    const auto near = brute_force_nearest(words, words[7] ^ 0b101);
    CHECK(near.distance == 2);
    CHECK(near.codewords == std::vector<std::uint64_t>{words[7]});
}

TEST_CASE("table limits") {
    TableLimits tight;
    tight.cap_bits = 12;
    CHECK_THROWS_AS(CosetLeaderTable::build(BchCode(5, 3).code(), tight), resource_error);
    try {
        check_table_limits(31, 15, tight);
    } catch (const resource_error& e) {
        CHECK(e.required() == 32768.0);
    }
    TableLimits slow;
    slow.work_budget = 1000;
    CHECK_THROWS_AS(CosetLeaderTable::build(BchCode(4, 3).code(), slow), resource_error);
}

TEST_CASE("table cache round trip") {
    const BchCode bch(4, 2);
    const auto table = CosetLeaderTable::build(bch.code());
    const auto path = std::filesystem::temp_directory_path() / "pstego_cache_test.pscl";
    table.save(path, bch.code());
    const auto loaded = CosetLeaderTable::load(path, bch.code());
    CHECK(loaded.weight_distribution() == table.weight_distribution());
    for (std::uint64_t s = 0; s < table.size(); ++s) CHECK(loaded.leader(s) == table.leader(s));
    CHECK_THROWS(CosetLeaderTable::load(path, BchCode(4, 3).code()));
    std::filesystem::remove(path);
}
