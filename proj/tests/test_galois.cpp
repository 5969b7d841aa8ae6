#include "doctest.h"
#include "pstego/galois.hpp"

using namespace pstego;

TEST_CASE("GF(16) products and inverses by hand") {
    const GaloisField f(4);
    CHECK(f.prim_poly() == 0x13);
    // alpha^4 = alpha + 1 under x^4 + x + 1
    CHECK(f.mul(f.alpha(), f.alpha_pow(3)) == GfElement{0b0011});
    // alpha * (alpha^3 + 1) = alpha^4 + alpha = 1
    CHECK(f.inv(f.alpha()) == GfElement{0b1001});
    CHECK(f.alpha_pow(15) == GfElement{1});
    CHECK(f.alpha_pow(-1) == f.inv(f.alpha()));
    CHECK(f.log(GfElement{0b0011}) == 4);
}

TEST_CASE("table multiplication agrees with carry-less multiplication") {
    for (int m = 2; m <= 8; ++m) {
        const GaloisField f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a)
            for (std::uint32_t b = 0; b < f.size(); ++b)
                REQUIRE(f.mul({a}, {b}) == gf_mul_slow({a}, {b}, m, f.prim_poly()));
    }
}

TEST_CASE("field axioms") {
    for (int m : {3, 5, 7}) {
        const GaloisField f(m);
        for (std::uint32_t a = 1; a < f.size(); ++a) {
            REQUIRE(f.mul({a}, f.inv({a})) == GfElement{1});
            REQUIRE(f.alpha_pow(f.log({a})) == GfElement{a});
            REQUIRE(f.div({a}, {a}) == GfElement{1});
            for (std::uint32_t b = 1; b < f.size(); b += 3)
                for (std::uint32_t c = 0; c < f.size(); c += 5)
                    REQUIRE(f.mul({a}, GfElement{b} + GfElement{c}) == f.mul({a}, {b}) + f.mul({a}, {c}));
        }
    }
}

TEST_CASE("nonzero elements form a cyclic group generated by alpha") {
    for (int m = 2; m <= 12; ++m) {
        const GaloisField f(m);
        std::vector<bool> seen(f.size(), false);
        GfElement x{1};
        for (std::uint32_t i = 0; i < f.order(); ++i) {
            REQUIRE_FALSE(seen[x.bits]);
            seen[x.bits] = true;
            x = f.mul(x, f.alpha());
        }
        CHECK(x == GfElement{1});
        CHECK_FALSE(seen[0]);
    }
}

TEST_CASE("pow edge cases") {
    const GaloisField f(4);
    CHECK(f.pow(GfElement{0}, 0) == GfElement{1});
    CHECK(f.pow(GfElement{0}, 3) == GfElement{0});
    CHECK_THROWS_AS(f.pow(GfElement{0}, -1), domain_error);
    CHECK(f.pow(f.alpha(), -2) == f.alpha_pow(13));
    CHECK_THROWS_AS(f.inv(GfElement{0}), domain_error);
}

TEST_CASE("primitive polynomials") {
    for (int m = 2; m <= 16; ++m) CHECK(is_primitive_poly(m, default_primitive_poly(m)));
    // x^4 + x^3 + x^2 + x + 1 is irreducible, but x has order 5
    CHECK_FALSE(is_primitive_poly(4, 0x1F));
    CHECK_THROWS(GaloisField(4, 0x1F));
    CHECK_THROWS(GaloisField(1));
    CHECK_THROWS(GaloisField(17));
}
