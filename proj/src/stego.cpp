#include "pstego/stego.hpp"

#include <cmath>
#include <random>
#include <string>

namespace pstego {

std::string_view scheme_kind_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::coset_table: return "coset-table";
        case SchemeKind::bounded_bch: return "bounded-bch";
        case SchemeKind::punctured: return "punctured";
    }
    return "unknown";
}

StegoScheme::StegoScheme(std::shared_ptr<const LinearCode> code, std::shared_ptr<const Decoder> decoder,
                         SchemeKind kind)
    : code_(std::move(code)), decoder_(std::move(decoder)), kind_(kind) {
    if (code_->length() != decoder_->length()) throw std::invalid_argument("decoder length differs from code length");
}

StegoScheme StegoScheme::from_table(std::shared_ptr<const LinearCode> code,
                                    std::shared_ptr<const CosetLeaderTable> table) {
    auto dec = std::make_shared<const CosetTableDecoder>(code, std::move(table));
    return StegoScheme(std::move(code), std::move(dec), SchemeKind::coset_table);
}

StegoScheme StegoScheme::from_bch(std::shared_ptr<const BchCode> bch) {
    auto code = bch->code_ptr();
    return StegoScheme(std::move(code), std::make_shared<const BchDecoder>(std::move(bch)), SchemeKind::bounded_bch);
}

StegoScheme StegoScheme::from_puncture(const PunctureResult& result, std::shared_ptr<const Decoder> parent_decoder) {
    if (parent_decoder->length() != result.parent->length())
        throw std::invalid_argument("parent decoder length differs from the parent code");
    auto dec = std::make_shared<const PuncturedDecoder>(std::move(parent_decoder), result.punctured);
    return StegoScheme(result.child, std::move(dec), SchemeKind::punctured);
}

std::optional<BitVector> StegoScheme::embed(const BitVector& cover, const BitVector& msg) const {
    if (cover.size() != length())
        throw std::invalid_argument("embed: cover length " + std::to_string(cover.size()) + " != " +
                                    std::to_string(length()));
    if (msg.size() != message_length())
        throw std::invalid_argument("embed: message length " + std::to_string(msg.size()) + " != " +
                                    std::to_string(message_length()));
    const BitVector y = code_->syndrome_preimage(msg);
    auto c = decoder_->decode(cover ^ y);
    if (!c) return std::nullopt;
    *c ^= y;
    return c;
}

BitVector StegoScheme::extract(const BitVector& stego) const {
    if (stego.size() != length())
        throw std::invalid_argument("extract: length " + std::to_string(stego.size()) + " != " +
                                    std::to_string(length()));
    return code_->syndrome(stego);
}

SchemeParams scheme_params(const StegoScheme& scheme, const CosetLeaderTable* table) {
    SchemeParams p;
    p.n = static_cast<int>(scheme.length());
    p.r = static_cast<int>(scheme.message_length());
    p.a = static_cast<double>(p.r) / p.n;
    const int t = scheme.max_changes();

    if (table != nullptr) {
        p.T = table->covering_radius();
        p.T_avg = table->average_radius_within(t);
        p.T_avg_all = table->average_radius();
        p.p_S_exact = Rational(BigInt(table->cosets_within(t)), BigInt(table->size()));
    } else if (scheme.kind() == SchemeKind::bounded_bch) {
        // every vector of weight <= t leads its own coset
        p.p_S_exact = embedding_probability_exact(p.n, p.r, t);
    } else {
        p.p_S_exact = Rational(1);
    }
    p.p_S = static_cast<double>(p.p_S_exact);

    const auto ratio = [](const Rational& num, const Rational& den) { return static_cast<double>(num / den); };
    if (p.T) {
        p.R = static_cast<double>(*p.T) / p.n;
        if (*p.T > 0) p.e = static_cast<double>(p.r) / *p.T;
    }
    if (p.T_avg) {
        p.R_avg = ratio(*p.T_avg, Rational(p.n));
        if (*p.T_avg > 0) p.e_avg = ratio(Rational(p.r), *p.T_avg);
    }
    if (p.T_avg_all && *p.T_avg_all > 0) p.e_avg_all = ratio(Rational(p.r), *p.T_avg_all);
    if (p.e) p.e_rel = *p.e * p.p_S;
    if (p.e_avg) p.e_avg_rel = *p.e_avg * p.p_S;
    if (p.e_avg_all) p.e_avg_all_rel = *p.e_avg_all * p.p_S;
    return p;
}

SchemeParams scheme_params(const StegoScheme& scheme, const TableLimits& limits) {
    try {
        const auto table = CosetLeaderTable::build(scheme.code(), limits);
        return scheme_params(scheme, &table);
    } catch (const resource_error&) {
        return scheme_params(scheme, nullptr);
    }
}

double q_entropy(int q, double x) {
    if (q < 2) throw std::invalid_argument("q_entropy: q must be >= 2");
    const double lq = std::log(static_cast<double>(q));
    double h = 0;
    if (x > 0) h += x * std::log(static_cast<double>(q - 1)) / lq - x * std::log(x) / lq;
    if (x < 1) h -= (1 - x) * std::log1p(-x) / lq;
    return h;
}

double inverse_q_entropy(int q, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("inverse entropy: a must lie in (0, 1]");
    const double top = static_cast<double>(q - 1) / q;
    if (a == 1.0) return top;
    double lo = 0.0;
    double hi = top;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (q_entropy(q, mid) < a)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double entropy_bound(int q, double a) { return a / inverse_q_entropy(q, a); }

double empirical_probability(const StegoScheme& scheme, std::uint64_t trials, std::uint64_t seed) {
    const std::size_t n = scheme.length();
    const std::size_t r = scheme.message_length();
    std::uint64_t ok = 0;
    std::uint64_t total = 0;
    if (n + r <= 24) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            const BitVector cover = BitVector::from_word(x, n);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
                ok += scheme.embed(cover, BitVector::from_word(m, r)).has_value();
                ++total;
            }
        }
    } else {
        if (trials == 0) throw std::invalid_argument("empirical_probability: trials must be >= 1");
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution bit(0.5);
        for (std::uint64_t i = 0; i < trials; ++i) {
            BitVector cover(n);
            BitVector msg(r);
            for (std::size_t j = 0; j < n; ++j) cover.set(j, bit(rng));
            for (std::size_t j = 0; j < r; ++j) msg.set(j, bit(rng));
            ok += scheme.embed(cover, msg).has_value();
            ++total;
        }
    }
    return static_cast<double>(ok) / static_cast<double>(total);
}

}  // namespace pstego
