#include "pstego/bitstream.hpp"

#include <algorithm>
#include <string>

namespace pstego {

namespace {

constexpr std::uint8_t magic[4] = {'S', 'T', 'G', 'C'};
constexpr std::size_t header_bytes = 4 + 2 + 1 + 1 + 4 + 4 + 8 + 4 + 8;

template <typename T>
void put_be(std::vector<std::uint8_t>& out, T v) {
    for (int shift = 8 * (static_cast<int>(sizeof(T)) - 1); shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

template <typename T>
T get_be(std::span<const std::uint8_t> bytes, std::size_t& pos) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v = static_cast<T>((v << 8) | bytes[pos++]);
    return v;
}

BitVector slice(const BitVector& v, std::size_t from, std::size_t len) {
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (v.get(from + i)) out.set(i);
    return out;
}

void paste(BitVector& dst, std::size_t at, const BitVector& src) {
    for (std::size_t i = 0; i < src.size(); ++i) dst.set(at + i, src.get(i));
}

}  // namespace

std::vector<std::uint8_t> serialize(const BitstreamFile& file) {
    std::vector<std::uint8_t> out(std::begin(magic), std::end(magic));
    put_be<std::uint16_t>(out, file.version);
    out.push_back(static_cast<std::uint8_t>(file.kind));
    out.push_back(0);
    put_be<std::uint32_t>(out, file.n);
    put_be<std::uint32_t>(out, file.r);
    put_be<std::uint64_t>(out, file.block_count);
    put_be<std::uint32_t>(out, file.pad);
    put_be<std::uint64_t>(out, file.payload.size());
    const auto body = bits_to_bytes(file.payload);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

BitstreamFile parse_bitstream(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < header_bytes) throw format_error("stream too short for a header");
    if (!std::equal(std::begin(magic), std::end(magic), bytes.begin())) throw format_error("bad magic, expected STGC");
    std::size_t pos = 4;
    BitstreamFile f;
    f.version = get_be<std::uint16_t>(bytes, pos);
    if (f.version != stream_version) throw format_error("unsupported stream version " + std::to_string(f.version));
    const auto kind = bytes[pos++];
    if (kind > static_cast<std::uint8_t>(SchemeKind::punctured)) throw format_error("unknown scheme kind");
    f.kind = static_cast<SchemeKind>(kind);
    ++pos;
    f.n = get_be<std::uint32_t>(bytes, pos);
    f.r = get_be<std::uint32_t>(bytes, pos);
    f.block_count = get_be<std::uint64_t>(bytes, pos);
    f.pad = get_be<std::uint32_t>(bytes, pos);
    const auto payload_bits = get_be<std::uint64_t>(bytes, pos);

    if (f.n == 0 || f.r == 0) throw format_error("zero block size");
    if (f.r > 0 && f.pad >= f.r && f.block_count > 0) throw format_error("pad exceeds one message block");
    if (f.block_count == 0 && f.pad != 0) throw format_error("pad without blocks");
    if (f.block_count > payload_bits / f.n) throw format_error("block count exceeds payload");
    if ((payload_bits + 7) / 8 != bytes.size() - header_bytes) throw format_error("payload length mismatch");

    f.payload = slice(bytes_to_bits(bytes.subspan(header_bytes)), 0, payload_bits);
    return f;
}

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes) {
    BitVector out(bytes.size() * 8);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        for (int b = 0; b < 8; ++b)
            if ((bytes[i] >> (7 - b)) & 1) out.set(8 * i + b);
    return out;
}

std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i : bits.support()) out[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
    return out;
}

StreamEmbedResult embed_stream(const StegoScheme& scheme, const BitVector& cover, const BitVector& message) {
    const std::size_t n = scheme.length();
    const std::size_t r = scheme.message_length();
    const std::uint64_t blocks = (message.size() + r - 1) / r;
    if (blocks * n > cover.size())
        throw capacity_error("message of " + std::to_string(message.size()) + " bits needs " +
                                 std::to_string(blocks) + " blocks of " + std::to_string(n) +
                                 " cover bits; cover has " + std::to_string(cover.size()) + " bits (capacity " +
                                 std::to_string(cover.size() / n * r) + " message bits)",
                             message.size(), cover.size() / n * r);

    StreamEmbedResult res;
    res.file.kind = scheme.kind();
    res.file.n = static_cast<std::uint32_t>(n);
    res.file.r = static_cast<std::uint32_t>(r);
    res.file.block_count = blocks;
    res.file.pad = static_cast<std::uint32_t>(blocks * r - message.size());
    res.file.payload = cover;

    BitVector padded(blocks * r);
    paste(padded, 0, message);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const BitVector x = slice(cover, b * n, n);
        const auto s = scheme.embed(x, slice(padded, b * r, r));
        BlockReport rep{b, s.has_value(), 0};
        if (s) {
            rep.changes = static_cast<int>(distance(x, *s));
            paste(res.file.payload, b * n, *s);
        } else {
            ++res.failed;
        }
        res.blocks.push_back(rep);
    }
    return res;
}

BitVector extract_stream(const StegoScheme& scheme, const BitstreamFile& file) {
    if (file.n != scheme.length() || file.r != scheme.message_length())
        throw format_error("stream blocks are [" + std::to_string(file.n) + ", " + std::to_string(file.r) +
                           "] but the scheme is [" + std::to_string(scheme.length()) + ", " +
                           std::to_string(scheme.message_length()) + "]");
    const std::size_t n = file.n;
    const std::size_t r = file.r;
    BitVector msg(file.block_count * r);
    for (std::uint64_t b = 0; b < file.block_count; ++b)
        paste(msg, b * r, scheme.extract(slice(file.payload, b * n, n)));
    return slice(msg, 0, file.message_bits());
}

}  // namespace pstego
