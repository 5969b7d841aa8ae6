#include <random>

#include "doctest.h"
#include "pstego/bch.hpp"

using namespace pstego;

namespace {

// Evaluates a binary polynomial (bit i = coefficient of x^i) at a field element.
GfElement evaluate(const GaloisField& f, const BitVector& poly, GfElement x) {
    GfElement acc{};
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = f.mul(acc, x);
        if (poly.get(i)) acc = acc + GfElement{1};
    }
    return acc;
}

BitVector random_word(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
    return v;
}

}  // namespace

TEST_CASE("parameters") {
    CHECK(BchCode(4, 1).code().dimension() == 11);
    CHECK(BchCode(4, 2).code().dimension() == 7);
    CHECK(BchCode(4, 2).code().redundancy() == 8);
    CHECK(BchCode(4, 3).code().dimension() == 5);
    CHECK(BchCode(4, 3).code().redundancy() == 10);
    for (int m = 4; m <= 11; ++m) CHECK(bch_redundancy(m, 2) == static_cast<std::size_t>(2 * m));
    // alpha^5 has a cyclotomic coset of size 2 in GF(16)
    CHECK(bch_redundancy(4, 3) == 10);
    for (int m = 5; m <= 11; ++m) CHECK(bch_redundancy(m, 3) == static_cast<std::size_t>(3 * m));
    CHECK(BchCode(4, 3).designed_distance() == 7);
    CHECK_THROWS(BchCode(3, 4));
    CHECK_THROWS(BchCode(4, 0));
    CHECK_THROWS(BchCode(1, 1));
}

TEST_CASE("generator polynomial has the designed zeros and divides x^n - 1") {
    for (int m = 3; m <= 8; ++m)
        for (int t = 1; t <= 3; ++t) {
            if (2 * t + 1 > (1 << m) - 1) continue;
            const BchCode bch(m, t);
            const auto& f = bch.field();
            const auto& g = bch.generator_poly();
            CHECK(g.size() - 1 == bch.code().redundancy());
            for (int i = 1; i <= 2 * t; ++i) CHECK(evaluate(f, g, f.alpha_pow(i)).is_zero());
            // g divides x^n - 1 exactly when the code it generates is cyclic
            const auto& c = bch.code();
            BitVector row(c.length());
            for (std::size_t j : g.support()) row.set(j);
            BitVector shifted(c.length());
            for (std::size_t j : row.support()) shifted.set((j + c.length() - 1) % c.length());
            CHECK(c.contains(row));
            CHECK(c.contains(shifted));
        }
    // x^8 + x^7 + x^6 + x^4 + 1 for BCH_4(2) under x^4 + x + 1
    CHECK(BchCode(4, 2).generator_poly() == BitVector::from_string("100010111"));
}

TEST_CASE("codewords decode to themselves") {
    std::mt19937_64 rng(1);
    const BchCode bch(5, 3);
    for (int i = 0; i < 100; ++i) {
        const auto c = bch.code().encode(random_word(rng, bch.code().dimension()));
        const auto d = bm_decode(bch, c);
        REQUIRE(d.has_value());
        CHECK(*d == c);
    }
    CHECK_THROWS(bm_decode(bch, BitVector(30)));
}

TEST_CASE("exhaustive agreement with nearest-codeword search on n = 15") {
    for (int t = 2; t <= 3; ++t) {
        const BchCode bch(4, t);
        const auto words = bch.code().codeword_words();
        for (std::uint64_t y = 0; y < (1u << 15); ++y) {
            const auto near = brute_force_nearest(words, y);
            const auto d = bm_decode(bch, BitVector::from_word(y, 15));
            if (near.distance <= t) {
                REQUIRE(d.has_value());
                REQUIRE(d->to_word() == near.codewords.front());
            } else {
                REQUIRE_FALSE(d.has_value());
            }
        }
    }
}

TEST_CASE("random patterns within and beyond t") {
    std::mt19937_64 rng(2);
    for (auto [m, t] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 2}, std::pair{6, 3}, std::pair{7, 3}}) {
        const BchCode bch(m, t);
        const auto& code = bch.code();
        const std::size_t n = code.length();
        for (int trial = 0; trial < 2000; ++trial) {
            const auto c = code.encode(random_word(rng, code.dimension()));
            auto y = c;
            const int w = static_cast<int>(rng() % static_cast<unsigned>(t + 3));
            for (int flips = 0; flips < w;) {
                const auto p = rng() % n;
                if (y.get(p) == c.get(p)) {
                    y.flip(p);
                    ++flips;
                }
            }
            const auto d = bm_decode(bch, y);
            if (w <= t) {
                REQUIRE(d.has_value());
                CHECK(*d == c);
            } else if (d) {
                // never wrong: any answer is a codeword within t
                CHECK(code.contains(*d));
                CHECK(distance(*d, y) <= static_cast<std::size_t>(t));
            }
        }
    }
}

TEST_CASE("decodable cosets") {
    const BchCode b43(4, 3);
    const auto table = CosetLeaderTable::build(b43.code());
    CHECK(decode_success_count(b43, table) == 576);
    // a weight-4 leader lies beyond every ball of radius 3
    for (std::uint64_t s = 0; s < table.size(); ++s)
        if (table.leader_weight(s) == 4) {
            CHECK_FALSE(bm_decode(b43, table.leader(s)).has_value());
            break;
        }
    const BchCode b31(3, 1);
    CHECK(decode_success_count(b31, CosetLeaderTable::build(b31.code())) == 8);
}

TEST_CASE("decoder interface") {
    auto bch = std::make_shared<const BchCode>(4, 2);
    const BchDecoder dec(bch);
    CHECK(dec.capability() == 2);
    CHECK(dec.length() == 15);
    CHECK_FALSE(dec.minimum_distance());
}
