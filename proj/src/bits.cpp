#include "pstego/bits.hpp"

#include <algorithm>
#include <bit>

#include "pstego/kernels.hpp"

namespace pstego {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

BitVector BitVector::from_word(std::uint64_t w, std::size_t len) {
    if (len > 64) throw std::invalid_argument("from_word: length exceeds 64");
    BitVector v(len);
    if (len > 0) v.words_[0] = len == 64 ? w : (w & ((std::uint64_t{1} << len) - 1));
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    v.set(i);
    return v;
}

std::size_t BitVector::weight() const { return kernels::popcount(words_); }

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1)
            out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    return out;
}

std::uint64_t BitVector::to_word() const {
    if (len_ > 64) throw std::invalid_argument("to_word: vector longer than 64");
    return words_.empty() ? 0 : words_[0];
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.len_ != len_) throw std::invalid_argument("BitVector length mismatch");
    kernels::xor_into(words_, o.words_);
    return *this;
}

bool lex_less(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
        const std::uint64_t diff = a.words_[wi] ^ b.words_[wi];
        if (diff != 0) {
            // lowest differing bit is the leftmost differing coordinate
            const std::uint64_t lowest = diff & (~diff + 1);
            return (a.words_[wi] & lowest) == 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::size_t distance(const BitVector& a, const BitVector& b) { return (a ^ b).weight(); }

BitVector project(const BitVector& v, std::span<const std::size_t> keep) {
    BitVector out(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) {
        if (keep[j] >= v.size()) throw std::out_of_range("project: index out of range");
        if (v.get(keep[j])) out.set(j);
    }
    return out;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix rows must have equal length");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> v;
    for (auto s : rows) v.push_back(BitVector::from_string(s));
    return BitMatrix(std::move(v));
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c)) out.set(r);
    return out;
}

void BitMatrix::append_row(BitVector r) {
    if (rows_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    rows_.push_back(std::move(r));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c : rows_[r].support()) t.set(c, r);
    return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> keep) const {
    BitMatrix out(rows(), keep.size());
    for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = project(rows_[r], keep);
    return out;
}

BitVector BitMatrix::mul_transpose(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul_transpose: length mismatch");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        const auto a = rows_[r].words();
        const auto b = v.words();
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

BitVector BitMatrix::combine_rows(const BitVector& u) const {
    if (u.size() != rows()) throw std::invalid_argument("combine_rows: length mismatch");
    BitVector out(cols_);
    for (std::size_t r : u.support()) out ^= rows_[r];
    return out;
}

BitMatrix BitMatrix::mul_transpose(const BitMatrix& b) const {
    BitMatrix out(rows(), b.rows());
    for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = b.mul_transpose(rows_[r]);
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

RowEchelon rref(const BitMatrix& m) {
    RowEchelon out{m, {}, 0};
    BitMatrix& a = out.reduced;
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
        std::size_t p = next;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, next);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != next && a.get(r, c)) a.row(r) ^= a.row(next);
        out.pivots.push_back(c);
        ++next;
    }
    out.rank = next;
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

SystematicForm systematic_form(const BitMatrix& g) {
    const RowEchelon e = rref(g);
    if (e.rank != g.rows())
        throw rank_deficient("systematic_form: generator has rank " + std::to_string(e.rank) + " < " +
                             std::to_string(g.rows()) + " rows");
    SystematicForm out;
    out.perm = e.pivots;
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) out.perm.push_back(c);
    out.matrix = e.reduced.select_columns(out.perm);
    return out;
}

BitMatrix independent_rows(const BitMatrix& m) {
    // Incremental basis reduced on its pivot columns; a row is kept when it
    // does not reduce to zero against the rows kept so far.
    std::vector<BitVector> basis;
    std::vector<std::size_t> pivot;
    BitMatrix out(0, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector v = m.row(r);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v.get(pivot[i])) v ^= basis[i];
        if (v.is_zero()) continue;
        const auto sup = v.support();
        basis.push_back(v);
        pivot.push_back(sup.front());
        out.append_row(m.row(r));
    }
    return out;
}

BitMatrix delete_columns(const BitMatrix& m, std::span<const std::size_t> drop) {
    std::vector<bool> removed(m.cols(), false);
    for (auto c : drop) {
        if (c >= m.cols()) throw std::out_of_range("delete_columns: column " + std::to_string(c) + " out of range");
        removed[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!removed[c]) keep.push_back(c);
    return independent_rows(m.select_columns(keep));
}

BitMatrix null_space(const BitMatrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    BitMatrix out(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, f)) v.set(e.pivots[i]);
        out.append_row(std::move(v));
    }
    return out;
}

}  // namespace pstego
