#pragma once

#include <memory>
#include <vector>

#include "pstego/code.hpp"
#include "pstego/coset_table.hpp"
#include "pstego/decoder.hpp"
#include "pstego/galois.hpp"

namespace pstego {

/// Primitive narrow-sense binary BCH code BCH_m(t): length 2^m - 1, generator
/// polynomial lcm of the minimal polynomials of alpha^1 .. alpha^{2t}.
///
/// Coordinate j holds the coefficient of x^j. The generator matrix rows
/// x^i g(x) reduce to [I_k | A] without column swaps, so the information
/// positions are the first k coordinates and perm() is the identity.
class BchCode {
  public:
    BchCode(int m, int t);
    BchCode(int m, int t, GaloisField field);

    int m() const { return field_.m(); }
    int t() const { return t_; }
    int designed_distance() const { return 2 * t_ + 1; }
    std::size_t length() const { return code_->length(); }

    const GaloisField& field() const { return field_; }
    /// Coefficients of g(x), index i = coefficient of x^i.
    const BitVector& generator_poly() const { return gen_; }
    const LinearCode& code() const { return *code_; }
    std::shared_ptr<const LinearCode> code_ptr() const { return code_; }

  private:
    GaloisField field_;
    int t_;
    BitVector gen_;
    std::shared_ptr<const LinearCode> code_;
};

/// Cyclotomic cosets of 2 modulo 2^m - 1 that contain one of 1..2t.
std::vector<std::vector<std::uint32_t>> bch_cyclotomic_cosets(int m, int t);

/// deg g(x) for BCH_m(t) without building the code.
std::size_t bch_redundancy(int m, int t);

/// Bounded-distance Berlekamp-Massey decoding with Chien search. Returns the
/// codeword within distance t of y, or nullopt when none is found (locator of
/// degree > t, fewer distinct roots than its degree, or a non-codeword result).
DecodeOutcome bm_decode(const BchCode& code, const BitVector& y);

/// Number of cosets whose leader has weight <= t. Throws std::logic_error if
/// bm_decode disagrees with the leader weight on any coset representative.
std::uint64_t decode_success_count(const BchCode& code, const CosetLeaderTable& table);

class BchDecoder final : public Decoder {
  public:
    explicit BchDecoder(std::shared_ptr<const BchCode> code) : code_(std::move(code)) {}

    DecodeOutcome decode(const BitVector& y) const override { return bm_decode(*code_, y); }
    std::size_t length() const override { return code_->length(); }
    int capability() const override { return code_->t(); }
    bool minimum_distance() const override { return false; }
    std::string_view name() const override { return "bounded-bch"; }

  private:
    std::shared_ptr<const BchCode> code_;
};

}  // namespace pstego
