#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pstego {

/// Packed binary vector. Coordinate i lives in bit (i % 64) of word (i / 64);
/// bits past size() are always zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    /// Parses "0110..." with character i giving coordinate i.
    static BitVector from_string(std::string_view s);
    /// Low `len` bits of `w`, bit i -> coordinate i. Requires len <= 64.
    static BitVector from_word(std::uint64_t w, std::size_t len);
    static BitVector unit(std::size_t len, std::size_t i);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }
    /// The single packed word of a vector with size() <= 64.
    std::uint64_t to_word() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Order of the left-to-right bit strings (coordinate 0 compared first, 0 < 1).
    friend bool lex_less(const BitVector& a, const BitVector& b);

    std::string to_string() const;

    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t distance(const BitVector& a, const BitVector& b);

/// Coordinates of `v` at the (strictly increasing) indices in `keep`.
BitVector project(const BitVector& v, std::span<const std::size_t> keep);

/// Row-major packed matrix over GF(2).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::vector<BitVector> rows);
    static BitMatrix identity(std::size_t n);
    /// One string per row, as in BitVector::from_string.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    BitVector column(std::size_t c) const;

    void append_row(BitVector r);
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

    BitMatrix transpose() const;
    /// Columns `keep` (in the given order).
    BitMatrix select_columns(std::span<const std::size_t> keep) const;

    /// v * M^T: bit i of the result is <v, row i>.
    BitVector mul_transpose(const BitVector& v) const;
    /// u * M: XOR of the rows selected by u.
    BitVector combine_rows(const BitVector& u) const;
    /// A * B^T.
    BitMatrix mul_transpose(const BitMatrix& b) const;

    bool is_zero() const;
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::string to_string() const;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

class rank_deficient : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RowEchelon {
    BitMatrix reduced;                 // same shape as the input; zero rows last
    std::vector<std::size_t> pivots;   // strictly increasing
    std::size_t rank = 0;
};

RowEchelon rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

struct SystematicForm {
    BitMatrix matrix;               // [I_k | A]
    std::vector<std::size_t> perm;  // column j of `matrix` is column perm[j] of the input
};

/// Brings a full-row-rank generator to [I_k | A] by row reduction and moving
/// pivot columns to the front. Throws rank_deficient otherwise.
SystematicForm systematic_form(const BitMatrix& g);

/// Greedily keeps the rows of `m` that are independent of the rows kept before them.
BitMatrix independent_rows(const BitMatrix& m);

/// Removes the columns in `drop`, then the rows that became linearly dependent.
BitMatrix delete_columns(const BitMatrix& m, std::span<const std::size_t> drop);

/// Basis (as rows) of { x : m * x^T = 0 }.
BitMatrix null_space(const BitMatrix& m);

}  // namespace pstego
