#include "pstego/decoder.hpp"

namespace pstego {

CosetTableDecoder::CosetTableDecoder(std::shared_ptr<const LinearCode> code,
                                     std::shared_ptr<const CosetLeaderTable> table)
    : code_(std::move(code)), table_(std::move(table)) {
    if (code_->length() != table_->length() || static_cast<int>(code_->redundancy()) != table_->redundancy())
        throw std::invalid_argument("coset table does not match the code");
}

DecodeOutcome CosetTableDecoder::decode(const BitVector& y) const {
    BitVector c = y;
    const auto leader = table_->leader_words(code_->syndrome_word(y));
    auto w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= leader[i];
    return c;
}

}  // namespace pstego
