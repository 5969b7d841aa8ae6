#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "pstego/bits.hpp"
#include "pstego/coset_table.hpp"

namespace pstego {

/// Either a codeword, or nullopt when the decoder gives up.
using DecodeOutcome = std::optional<BitVector>;

/// A decoding map for a binary linear code. Implementations are immutable and
/// safe to call concurrently.
class Decoder {
  public:
    virtual ~Decoder() = default;

    virtual DecodeOutcome decode(const BitVector& y) const = 0;
    virtual std::size_t length() const = 0;
    /// Every y within this distance of the code is decoded to its nearest codeword.
    virtual int capability() const = 0;
    /// True when decode() is complete and always returns a nearest codeword.
    virtual bool minimum_distance() const = 0;
    virtual std::string_view name() const = 0;
};

/// Syndrome-leader decoding: y -> y - cl(yH^T).
class CosetTableDecoder final : public Decoder {
  public:
    CosetTableDecoder(std::shared_ptr<const LinearCode> code, std::shared_ptr<const CosetLeaderTable> table);

    DecodeOutcome decode(const BitVector& y) const override;
    std::size_t length() const override { return code_->length(); }
    int capability() const override { return table_->covering_radius(); }
    bool minimum_distance() const override { return true; }
    std::string_view name() const override { return "coset-table"; }

  private:
    std::shared_ptr<const LinearCode> code_;
    std::shared_ptr<const CosetLeaderTable> table_;
};

}  // namespace pstego
