#include "pstego/bch.hpp"

#include <algorithm>
#include <string>

namespace pstego {

namespace {

void check_params(int m, int t) {
    if (m < 2 || m > 16) throw std::invalid_argument("BCH: m must be in [2, 16]");
    if (t < 1) throw std::invalid_argument("BCH: t must be >= 1");
    const long n = (1L << m) - 1;
    if (2L * t + 1 > n)
        throw std::invalid_argument("BCH: designed distance 2t+1 = " + std::to_string(2 * t + 1) +
                                    " exceeds length " + std::to_string(n));
}

// Binary polynomial product; bit i = coefficient of x^i.
BitVector poly_mul(const BitVector& a, const BitVector& b) {
    BitVector out(a.size() + b.size() - 1);
    for (std::size_t i : a.support())
        for (std::size_t j : b.support()) out.flip(i + j);
    return out;
}

BitVector minimal_poly(const GaloisField& f, const std::vector<std::uint32_t>& coset) {
    // prod (x + alpha^e) over the coset; coefficients land in GF(2).
    std::vector<GfElement> p{GfElement{1}};
    for (auto e : coset) {
        const GfElement root = f.alpha_pow(e);
        std::vector<GfElement> next(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] = next[i + 1] + p[i];
            next[i] = next[i] + f.mul(p[i], root);
        }
        p = std::move(next);
    }
    BitVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].bits > 1) throw std::logic_error("minimal polynomial has a non-binary coefficient");
        if (p[i].bits == 1) out.set(i);
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> bch_cyclotomic_cosets(int m, int t) {
    check_params(m, t);
    const std::uint32_t n = (1u << m) - 1;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t i = 1; i <= static_cast<std::uint32_t>(2 * t); ++i) {
        if (seen[i % n]) continue;
        std::vector<std::uint32_t> coset;
        for (std::uint32_t e = i % n; !seen[e]; e = (2 * e) % n) {
            seen[e] = true;
            coset.push_back(e);
        }
        out.push_back(std::move(coset));
    }
    return out;
}

std::size_t bch_redundancy(int m, int t) {
    std::size_t r = 0;
    for (const auto& c : bch_cyclotomic_cosets(m, t)) r += c.size();
    return r;
}

BchCode::BchCode(int m, int t) : BchCode(m, t, GaloisField(m)) {}

BchCode::BchCode(int m, int t, GaloisField field) : field_(std::move(field)), t_(t) {
    check_params(m, t);
    if (field_.m() != m) throw std::invalid_argument("BCH: field degree does not match m");

    gen_ = BitVector::from_string("1");
    for (const auto& coset : bch_cyclotomic_cosets(m, t)) gen_ = poly_mul(gen_, minimal_poly(field_, coset));

    const std::size_t n = field_.order();
    const std::size_t r = gen_.size() - 1;
    const std::size_t k = n - r;
    BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j : gen_.support()) g.set(i, i + j);
    code_ = std::make_shared<const LinearCode>(LinearCode::from_generator(g));
}

DecodeOutcome bm_decode(const BchCode& code, const BitVector& y) {
    const std::size_t n = code.length();
    if (y.size() != n)
        throw std::invalid_argument("bm_decode: received length " + std::to_string(y.size()) + " != " +
                                    std::to_string(n));
    const GaloisField& f = code.field();
    const int t = code.t();
    const auto support = y.support();

    // S_1..S_2t, stored at index 0..2t-1.
    std::vector<GfElement> synd(static_cast<std::size_t>(2 * t));
    bool all_zero = true;
    for (int i = 1; i <= 2 * t; ++i) {
        GfElement s{};
        for (auto j : support) s = s + f.alpha_pow(static_cast<std::int64_t>(i) * static_cast<std::int64_t>(j));
        synd[static_cast<std::size_t>(i - 1)] = s;
        all_zero = all_zero && s.is_zero();
    }
    if (all_zero) return y;

    // Berlekamp-Massey: shortest LFSR (connection polynomial c) generating S.
    std::vector<GfElement> c{GfElement{1}};
    std::vector<GfElement> b{GfElement{1}};
    int len = 0;
    int shift = 1;
    GfElement last{1};
    for (int k = 0; k < 2 * t; ++k) {
        GfElement d = synd[static_cast<std::size_t>(k)];
        for (int i = 1; i <= len && i < static_cast<int>(c.size()); ++i)
            d = d + f.mul(c[static_cast<std::size_t>(i)], synd[static_cast<std::size_t>(k - i)]);
        if (d.is_zero()) {
            ++shift;
            continue;
        }
        const GfElement coef = f.div(d, last);
        std::vector<GfElement> next = c;
        if (next.size() < b.size() + static_cast<std::size_t>(shift)) next.resize(b.size() + shift);
        for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] = next[i + shift] + f.mul(coef, b[i]);
        if (2 * len <= k) {
            b = std::move(c);
            len = k + 1 - len;
            last = d;
            shift = 1;
        } else {
            ++shift;
        }
        c = std::move(next);
    }
    if (len > t) return std::nullopt;
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    if (static_cast<int>(c.size()) - 1 != len) return std::nullopt;

    // Chien search: error at j iff c(alpha^{-j}) = 0.
    BitVector out = y;
    int roots = 0;
    for (std::size_t j = 0; j < n; ++j) {
        GfElement v{};
        for (std::size_t l = 0; l < c.size(); ++l)
            if (!c[l].is_zero())
                v = v + f.mul(c[l], f.alpha_pow(-static_cast<std::int64_t>(j) * static_cast<std::int64_t>(l)));
        if (v.is_zero()) {
            out.flip(j);
            ++roots;
        }
    }
    if (roots != len) return std::nullopt;
    const LinearCode& lc = code.code();
    const bool is_codeword = lc.redundancy() <= 64 ? lc.syndrome_word(out) == 0 : lc.contains(out);
    if (!is_codeword) return std::nullopt;
    return out;
}

std::uint64_t decode_success_count(const BchCode& code, const CosetLeaderTable& table) {
    const int t = code.t();
    const LinearCode& lc = code.code();
    std::uint64_t ok = 0;
    for (std::uint64_t s = 0; s < table.size(); ++s) {
        const BitVector leader = table.leader(s);
        const auto decoded = bm_decode(code, leader);
        const bool expect = table.leader_weight(s) <= t;
        if (decoded.has_value() != expect)
            throw std::logic_error("bm_decode disagrees with the coset table at syndrome " + std::to_string(s));
        if (decoded) {
            if (!lc.contains(*decoded) || distance(*decoded, leader) > static_cast<std::size_t>(t))
                throw std::logic_error("bm_decode returned a wrong codeword at syndrome " + std::to_string(s));
            ++ok;
        }
    }
    return ok;
}

}  // namespace pstego
