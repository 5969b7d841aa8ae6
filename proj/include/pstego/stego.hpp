#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "pstego/bch.hpp"
#include "pstego/code.hpp"
#include "pstego/coset_table.hpp"
#include "pstego/decoder.hpp"
#include "pstego/puncture.hpp"

namespace pstego {

enum class SchemeKind { coset_table, bounded_bch, punctured };

std::string_view scheme_kind_name(SchemeKind k);

/// Matrix-embedding stegoscheme over a linear code and one of its decoders.
///
///   Emb(x, m) = y + dec(x - y),  y = (0, m) in systematic coordinates
///   Ext(v)    = v H^T
///
/// With the syndrome-leader decoder this is x - cl(xH^T - m).
class StegoScheme {
  public:
    StegoScheme(std::shared_ptr<const LinearCode> code, std::shared_ptr<const Decoder> decoder, SchemeKind kind);

    /// Syndrome-leader realization; proper and always succeeds.
    static StegoScheme from_table(std::shared_ptr<const LinearCode> code, std::shared_ptr<const CosetLeaderTable> table);
    /// Bounded Berlekamp-Massey realization; fails when x - y is farther than t from the code.
    static StegoScheme from_bch(std::shared_ptr<const BchCode> bch);
    /// Punctured-code realization driven by the parent's decoder.
    static StegoScheme from_puncture(const PunctureResult& result, std::shared_ptr<const Decoder> parent_decoder);

    /// Stego vector with syndrome msg, or nullopt when the decoder fails.
    std::optional<BitVector> embed(const BitVector& cover, const BitVector& msg) const;
    BitVector extract(const BitVector& stego) const;

    std::size_t length() const { return code_->length(); }
    std::size_t message_length() const { return code_->redundancy(); }
    /// Largest number of changes a successful embedding can make.
    int max_changes() const { return decoder_->capability(); }
    bool proper() const { return decoder_->minimum_distance(); }
    SchemeKind kind() const { return kind_; }

    const LinearCode& code() const { return *code_; }
    std::shared_ptr<const LinearCode> code_ptr() const { return code_; }
    const Decoder& decoder() const { return *decoder_; }

  private:
    std::shared_ptr<const LinearCode> code_;
    std::shared_ptr<const Decoder> decoder_;
    SchemeKind kind_;
};

/// Scheme parameters. T is the covering radius of the scheme's code. T_avg is
/// the mean leader weight over the cosets the decoder handles (leader weight
/// <= max_changes()), which for complete decoders is every coset; T_avg_all
/// always averages over every coset. Fields that need the coset table are
/// empty when it exceeds the limits.
struct SchemeParams {
    int n = 0;
    int r = 0;
    double a = 0;
    std::optional<int> T;
    std::optional<Rational> T_avg;
    std::optional<Rational> T_avg_all;
    std::optional<double> R;
    std::optional<double> R_avg;
    std::optional<double> e;
    std::optional<double> e_avg;
    std::optional<double> e_avg_all;
    double p_S = 0;
    Rational p_S_exact;
    std::optional<double> e_rel;
    std::optional<double> e_avg_rel;
    std::optional<double> e_avg_all_rel;
};

SchemeParams scheme_params(const StegoScheme& scheme, const CosetLeaderTable* table);
SchemeParams scheme_params(const StegoScheme& scheme, const TableLimits& limits = {});

/// H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x).
double q_entropy(int q, double x);
/// Inverse of H_q on [0, (q-1)/q] by bisection to 1e-12.
double inverse_q_entropy(int q, double a);
/// a / H_q^{-1}(a): upper bound on embedding efficiency at relative payload a.
double entropy_bound(int q, double a);

/// Fraction of (cover, message) pairs that embed. Exhaustive when n + r <= 24,
/// otherwise `trials` uniform samples drawn from a generator seeded with `seed`.
double empirical_probability(const StegoScheme& scheme, std::uint64_t trials, std::uint64_t seed);

}  // namespace pstego
