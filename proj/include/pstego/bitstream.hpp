#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pstego/bits.hpp"
#include "pstego/stego.hpp"

namespace pstego {

class format_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a message needs more cover blocks than the cover holds.
class capacity_error : public std::runtime_error {
  public:
    capacity_error(const std::string& what, std::uint64_t needed_bits, std::uint64_t available_bits)
        : std::runtime_error(what), needed_(needed_bits), available_(available_bits) {}
    std::uint64_t needed_bits() const { return needed_; }
    std::uint64_t available_bits() const { return available_; }

  private:
    std::uint64_t needed_;
    std::uint64_t available_;
};

inline constexpr std::uint16_t stream_version = 1;

/// Stego container. All integers big-endian:
///
///   "STGC" | u16 version | u8 scheme kind | u8 reserved
///   | u32 n | u32 r | u64 block_count | u32 pad | u64 payload_bits | payload
///
/// The first block_count * n payload bits are stego blocks; the embedded
/// message has block_count * r - pad bits (left-aligned, zero padded). Payload
/// bits past the blocks are the untouched cover tail. Bits fill bytes MSB first.
struct BitstreamFile {
    std::uint16_t version = stream_version;
    SchemeKind kind = SchemeKind::punctured;
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint64_t block_count = 0;
    std::uint32_t pad = 0;
    BitVector payload;

    std::uint64_t message_bits() const { return block_count * r - pad; }
};

std::vector<std::uint8_t> serialize(const BitstreamFile& file);
BitstreamFile parse_bitstream(std::span<const std::uint8_t> bytes);

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes);
/// Packs MSB first; a trailing partial byte is zero filled.
std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits);

struct BlockReport {
    std::uint64_t index = 0;
    bool ok = false;
    int changes = 0;
};

struct StreamEmbedResult {
    BitstreamFile file;
    std::vector<BlockReport> blocks;
    std::uint64_t failed = 0;
    bool ok() const { return failed == 0; }
};

/// Embeds `message` block by block into the leading n-bit blocks of `cover`.
/// A failing block keeps its cover bits and is reported; the others proceed.
StreamEmbedResult embed_stream(const StegoScheme& scheme, const BitVector& cover, const BitVector& message);

/// Recovers the message; throws format_error when the header does not match the scheme.
BitVector extract_stream(const StegoScheme& scheme, const BitstreamFile& file);

}  // namespace pstego
