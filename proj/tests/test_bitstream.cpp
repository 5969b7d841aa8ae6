#include <random>

#include "doctest.h"
#include "pstego/bitstream.hpp"

using namespace pstego;

namespace {

BitVector random_bits(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
    return v;
}

StegoScheme punctured_scheme() {
    auto bch = std::make_shared<const BchCode>(4, 3);
    const auto res = find_puncture_set(bch->code_ptr(), StopPolicy{StopMode::reach_t, 3});
    return StegoScheme::from_puncture(res, std::make_shared<const BchDecoder>(bch));
}

}  // namespace

TEST_CASE("byte packing is MSB first") {
    const std::vector<std::uint8_t> bytes{0x80, 0x01};
    const auto bits = bytes_to_bits(bytes);
    CHECK(bits.to_string() == "1000000000000001");
    CHECK(bits_to_bytes(bits) == bytes);
    CHECK(bits_to_bytes(BitVector::from_string("101")) == std::vector<std::uint8_t>{0xa0});
    CHECK(bits_to_bytes(BitVector(0)).empty());
}

TEST_CASE("header round trip") {
    std::mt19937_64 rng(3);
    BitstreamFile f;
    f.kind = SchemeKind::bounded_bch;
    f.n = 15;
    f.r = 10;
    f.block_count = 3;
    f.pad = 4;
    f.payload = random_bits(rng, 50);
    const auto bytes = serialize(f);
    CHECK(bytes.size() == 36 + 7);
    CHECK(bytes[0] == 'S');
    CHECK(bytes[3] == 'C');
    const auto back = parse_bitstream(bytes);
    CHECK(back.kind == f.kind);
    CHECK(back.n == 15);
    CHECK(back.r == 10);
    CHECK(back.block_count == 3);
    CHECK(back.pad == 4);
    CHECK(back.payload == f.payload);
    CHECK(back.message_bits() == 26);
}

TEST_CASE("malformed streams are rejected") {
    BitstreamFile f;
    f.n = 12;
    f.r = 7;
    f.block_count = 1;
    f.payload = BitVector(12);
    const auto good = serialize(f);
    CHECK_NOTHROW(parse_bitstream(good));

    auto bad = good;
    bad[0] = 'X';
    CHECK_THROWS_AS(parse_bitstream(bad), format_error);
    bad = good;
    bad[5] = 9;  // version
    CHECK_THROWS_AS(parse_bitstream(bad), format_error);
    bad = good;
    bad[6] = 7;  // scheme kind
    CHECK_THROWS_AS(parse_bitstream(bad), format_error);
    bad = good;
    bad.pop_back();
    CHECK_THROWS_AS(parse_bitstream(bad), format_error);
    CHECK_THROWS_AS(parse_bitstream(std::span<const std::uint8_t>(good.data(), 10)), format_error);

    BitstreamFile big = f;
    big.block_count = 2;  // blocks exceed the payload
    CHECK_THROWS_AS(parse_bitstream(serialize(big)), format_error);
    BitstreamFile pad = f;
    pad.pad = 8;  // more padding than one block of message
    CHECK_THROWS_AS(parse_bitstream(serialize(pad)), format_error);
}

TEST_CASE("punctured stream embedding") {
    const auto s = punctured_scheme();
    REQUIRE(s.length() == 12);
    REQUIRE(s.message_length() == 7);
    std::mt19937_64 rng(4);
    const auto cover = random_bits(rng, 125);
    const auto msg = random_bits(rng, 70);
    const auto res = embed_stream(s, cover, msg);
    CHECK(res.ok());
    CHECK(res.file.block_count == 10);
    CHECK(res.file.pad == 0);
    CHECK(res.blocks.size() == 10);
    for (const auto& b : res.blocks) CHECK(b.changes <= 3);
    CHECK(res.file.payload.size() == 125);
    for (std::size_t i = 120; i < 125; ++i) CHECK(res.file.payload.get(i) == cover.get(i));

    const auto parsed = parse_bitstream(serialize(res.file));
    CHECK(extract_stream(s, parsed) == msg);

    const auto odd = random_bits(rng, 9);
    const auto r2 = embed_stream(s, cover, odd);
    CHECK(r2.file.block_count == 2);
    CHECK(r2.file.pad == 5);
    CHECK(extract_stream(s, r2.file) == odd);
}

TEST_CASE("empty message and capacity") {
    const auto s = punctured_scheme();
    std::mt19937_64 rng(5);
    const auto cover = random_bits(rng, 40);
    const auto res = embed_stream(s, cover, BitVector(0));
    CHECK(res.file.block_count == 0);
    CHECK(res.file.payload == cover);
    CHECK(extract_stream(s, res.file).size() == 0);

    CHECK_THROWS_AS(embed_stream(s, cover, random_bits(rng, 22)), capacity_error);
    try {
        embed_stream(s, cover, random_bits(rng, 22));
    } catch (const capacity_error& e) {
        CHECK(e.needed_bits() == 22);
        CHECK(e.available_bits() == 21);
    }
}

TEST_CASE("bounded stream reports failing blocks") {
    const auto s = StegoScheme::from_bch(std::make_shared<const BchCode>(4, 3));
    std::mt19937_64 rng(6);
    const auto cover = random_bits(rng, 15 * 40);
    const auto msg = random_bits(rng, 400);
    const auto res = embed_stream(s, cover, msg);
    CHECK(res.failed > 0);
    CHECK_FALSE(res.ok());
    std::uint64_t failed = 0;
    for (const auto& b : res.blocks)
        if (!b.ok) {
            ++failed;
            for (std::size_t i = 0; i < 15; ++i) CHECK(res.file.payload.get(b.index * 15 + i) == cover.get(b.index * 15 + i));
        }
    CHECK(failed == res.failed);

    const auto other = punctured_scheme();
    CHECK_THROWS_AS(extract_stream(other, res.file), format_error);
}
