#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "pstego/bits.hpp"

namespace pstego {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binary [n, k] linear code.
///
/// The generator G is reduced so that its columns at info_positions() form I_k,
/// and the parity-check matrix H has I_r at check_positions() (check position j
/// carries syndrome bit j). Listing the info positions followed by the check
/// positions gives the systematic permutation perm(): in those coordinates
/// G = [I_k | A] and H = [A^T | I_r], and the message m embeds as (0, m).
///
/// Syndromes follow one convention throughout: bit j of yH^T is row j of H,
/// and as an integer, syndrome bit 0 is the least significant bit.
class LinearCode {
  public:
    /// From any generator of full row rank.
    static LinearCode from_generator(const BitMatrix& g);
    /// From a parity-check matrix. H is kept as given when it already contains the
    /// unit columns e_0..e_{r-1}; otherwise it is replaced by its reduced form.
    static LinearCode from_parity_check(const BitMatrix& h);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return g_.rows(); }
    std::size_t redundancy() const { return h_.rows(); }

    const BitMatrix& generator() const { return g_; }
    const BitMatrix& parity_check() const { return h_; }
    const std::vector<std::size_t>& info_positions() const { return info_; }
    const std::vector<std::size_t>& check_positions() const { return check_; }
    /// Systematic coordinate j is native coordinate perm()[j].
    const std::vector<std::size_t>& perm() const { return perm_; }

    BitVector syndrome(const BitVector& y) const;

    /// Column i of H packed as an integer syndrome (redundancy() <= 64).
    const std::vector<std::uint64_t>& column_syndromes() const { return col_syn_; }
    std::uint64_t syndrome_word(const BitVector& y) const;

    /// The vector that is zero off the check positions and has syndrome s.
    BitVector syndrome_preimage(const BitVector& s) const;
    BitVector syndrome_preimage_word(std::uint64_t s) const;

    BitVector encode(const BitVector& info) const { return g_.combine_rows(info); }
    bool contains(const BitVector& y) const { return syndrome(y).is_zero(); }

    /// All 2^k codewords as packed words, in order of the info vector value
    /// (requires n <= 64 and k <= 30).
    std::vector<std::uint64_t> codeword_words() const;

    BitVector to_systematic(const BitVector& native) const { return project(native, perm_); }
    BitVector from_systematic(const BitVector& sys) const;

  private:
    LinearCode(BitMatrix g, BitMatrix h, std::vector<std::size_t> info, std::vector<std::size_t> check);

    std::size_t n_ = 0;
    BitMatrix g_;
    BitMatrix h_;
    std::vector<std::size_t> info_;
    std::vector<std::size_t> check_;
    std::vector<std::size_t> perm_;
    std::vector<std::uint64_t> col_syn_;
};

/// Binary Hamming code of length 2^m - 1. Column i (1-based) of H is the binary
/// expansion of i with its most significant bit in row 0.
LinearCode hamming_code(int m);

/// Sum_{j<=radius} C(n, j) (q-1)^j.
BigInt ball_volume(int q, int n, int radius);

BigInt binomial(int n, int k);

/// Syndrome-leader table size in megabits, one (n-bit leader, r-bit syndrome)
/// entry per coset: 2^r (n + r) / 10^6.
double syndrome_table_size_mb(int n, int r);

/// Minimum distance by codeword enumeration (n <= 64, k <= 30).
int minimum_distance(const LinearCode& code);

/// Every codeword at minimum distance from y, by exhaustive scan (n <= 64, k <= 30).
struct NearestCodewords {
    int distance = 0;
    std::vector<std::uint64_t> codewords;
};
NearestCodewords brute_force_nearest(const std::vector<std::uint64_t>& codewords, std::uint64_t y);

}  // namespace pstego
