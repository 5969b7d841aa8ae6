#include "pstego/code.hpp"

#include <bit>
#include <cmath>

#include "pstego/kernels.hpp"

namespace pstego {

LinearCode::LinearCode(BitMatrix g, BitMatrix h, std::vector<std::size_t> info, std::vector<std::size_t> check)
    : n_(g.cols()), g_(std::move(g)), h_(std::move(h)), info_(std::move(info)), check_(std::move(check)) {
    if (h_.cols() != n_ && h_.rows() > 0) throw std::invalid_argument("LinearCode: G and H lengths differ");
    perm_ = info_;
    perm_.insert(perm_.end(), check_.begin(), check_.end());
    if (h_.rows() <= 64) {
        col_syn_.assign(n_, 0);
        for (std::size_t j = 0; j < h_.rows(); ++j)
            for (std::size_t c : h_.row(j).support()) col_syn_[c] |= std::uint64_t{1} << j;
    }
}

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    const RowEchelon e = rref(g);
    if (e.rank != g.rows())
        throw rank_deficient("generator has rank " + std::to_string(e.rank) + " but " + std::to_string(g.rows()) +
                             " rows");
    const std::size_t n = g.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> check;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) check.push_back(c);

    BitMatrix h(check.size(), n);
    for (std::size_t j = 0; j < check.size(); ++j) {
        h.set(j, check[j]);
        for (std::size_t i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, check[j])) h.set(j, e.pivots[i]);
    }
    return LinearCode(e.reduced, std::move(h), e.pivots, std::move(check));
}

LinearCode LinearCode::from_parity_check(const BitMatrix& h_in) {
    const std::size_t n = h_in.cols();
    BitMatrix h = independent_rows(h_in);
    const std::size_t r = h.rows();

    // Prefer keeping H verbatim when it already carries the unit columns.
    std::vector<std::size_t> check(r, n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto col = h.column(c);
        if (col.weight() != 1) continue;
        const auto j = col.support().front();
        if (check[j] == n) check[j] = c;
    }
    if (std::find(check.begin(), check.end(), n) != check.end()) {
        const RowEchelon e = rref(h);
        h = e.reduced;
        check = e.pivots;
    }

    std::vector<bool> is_check(n, false);
    for (auto c : check) is_check[c] = true;
    std::vector<std::size_t> info;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_check[c]) info.push_back(c);

    BitMatrix g(info.size(), n);
    for (std::size_t i = 0; i < info.size(); ++i) {
        g.set(i, info[i]);
        for (std::size_t j = 0; j < r; ++j)
            if (h.get(j, info[i])) g.set(i, check[j]);
    }
    return LinearCode(std::move(g), std::move(h), std::move(info), std::move(check));
}

BitVector LinearCode::syndrome(const BitVector& y) const {
    if (y.size() != n_)
        throw std::invalid_argument("syndrome: vector length " + std::to_string(y.size()) + " != code length " +
                                    std::to_string(n_));
    return h_.mul_transpose(y);
}

std::uint64_t LinearCode::syndrome_word(const BitVector& y) const {
    if (y.size() != n_) throw std::invalid_argument("syndrome_word: length mismatch");
    if (h_.rows() > 64) throw std::invalid_argument("syndrome_word: redundancy exceeds 64");
    std::uint64_t s = 0;
    const auto w = y.words();
    for (std::size_t wi = 0; wi < w.size(); ++wi)
        for (std::uint64_t bits = w[wi]; bits != 0; bits &= bits - 1)
            s ^= col_syn_[wi * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
    return s;
}

BitVector LinearCode::syndrome_preimage(const BitVector& s) const {
    if (s.size() != redundancy()) throw std::invalid_argument("syndrome_preimage: length mismatch");
    BitVector y(n_);
    for (std::size_t j = 0; j < check_.size(); ++j)
        if (s.get(j)) y.set(check_[j]);
    return y;
}

BitVector LinearCode::syndrome_preimage_word(std::uint64_t s) const {
    BitVector y(n_);
    for (std::size_t j = 0; j < check_.size(); ++j)
        if ((s >> j) & 1u) y.set(check_[j]);
    return y;
}

std::vector<std::uint64_t> LinearCode::codeword_words() const {
    const std::size_t k = dimension();
    if (n_ > 64 || k > 30) throw std::invalid_argument("codeword_words: needs n <= 64 and k <= 30");
    std::vector<std::uint64_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = g_.row(i).to_word();
    std::vector<std::uint64_t> out(std::size_t{1} << k);
    // out[u] = u * G, filled through the lowest set bit of u
    for (std::size_t u = 1; u < out.size(); ++u) {
        const auto low = static_cast<std::size_t>(std::countr_zero(u));
        out[u] = out[u & (u - 1)] ^ rows[low];
    }
    return out;
}

BitVector LinearCode::from_systematic(const BitVector& sys) const {
    if (sys.size() != n_) throw std::invalid_argument("from_systematic: length mismatch");
    BitVector out(n_);
    for (std::size_t j = 0; j < n_; ++j)
        if (sys.get(j)) out.set(perm_[j]);
    return out;
}

LinearCode hamming_code(int m) {
    if (m < 2 || m > 20) throw std::invalid_argument("hamming_code: m must be in [2, 20]");
    const std::size_t n = (std::size_t{1} << m) - 1;
    BitMatrix h(static_cast<std::size_t>(m), n);
    for (std::size_t c = 0; c < n; ++c)
        for (int j = 0; j < m; ++j)
            if (((c + 1) >> (m - 1 - j)) & 1u) h.set(static_cast<std::size_t>(j), c);
    return LinearCode::from_parity_check(h);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt ball_volume(int q, int n, int radius) {
    if (q < 2) throw std::invalid_argument("ball_volume: q must be >= 2");
    if (radius < 0 || radius > n) throw std::invalid_argument("ball_volume: radius must lie in [0, n]");
    BigInt v = 0;
    BigInt qpow = 1;
    for (int j = 0; j <= radius; ++j) {
        v += binomial(n, j) * qpow;
        qpow *= (q - 1);
    }
    return v;
}

double syndrome_table_size_mb(int n, int r) {
    const BigInt bits = (BigInt{1} << r) * (n + r);
    if (n == 0 && r == 0) return 0.0;
    return static_cast<double>(bits) / 1e6;
}

NearestCodewords brute_force_nearest(const std::vector<std::uint64_t>& codewords, std::uint64_t y) {
    NearestCodewords out;
    out.distance = kernels::nearest_word(codewords, y).distance;
    for (auto c : codewords)
        if (std::popcount(c ^ y) == out.distance) out.codewords.push_back(c);
    return out;
}

int minimum_distance(const LinearCode& code) {
    const auto words = code.codeword_words();
    if (words.size() < 2) return static_cast<int>(code.length()) + 1;
    const std::span<const std::uint64_t> nonzero(words.data() + 1, words.size() - 1);
    return kernels::nearest_word(nonzero, 0).distance;
}

}  // namespace pstego
