#include "pstego/galois.hpp"

#include <array>
#include <string>

namespace pstego {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultPolys = {
    0,       0,
    0x7,      // x^2+x+1
    0xB,      // x^3+x+1
    0x13,     // x^4+x+1
    0x25,     // x^5+x^2+1
    0x43,     // x^6+x+1
    0x89,     // x^7+x^3+1
    0x11D,    // x^8+x^4+x^3+x^2+1
    0x211,    // x^9+x^4+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1053,   // x^12+x^6+x^4+x+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4443,   // x^14+x^10+x^6+x+1
    0x8003,   // x^15+x+1
    0x1100B,  // x^16+x^12+x^3+x+1
};

void check_degree(int m) {
    if (m < 2 || m > 16) throw std::invalid_argument("GF(2^m): m must be in [2, 16], got " + std::to_string(m));
}

}  // namespace

std::uint32_t default_primitive_poly(int m) {
    check_degree(m);
    return kDefaultPolys[static_cast<std::size_t>(m)];
}

bool is_primitive_poly(int m, std::uint32_t poly) {
    if (m < 2 || m > 16) return false;
    if ((poly >> m) != 1u) return false;
    const std::uint32_t order = (1u << m) - 1;
    // Walk the powers of x; primitive iff the first return to 1 happens at 2^m - 1.
    std::uint32_t v = 1;
    for (std::uint32_t i = 1; i <= order; ++i) {
        v <<= 1;
        if (v >> m) v ^= poly;
        if (v == 1) return i == order;
    }
    return false;
}

GaloisField::GaloisField(int m) : GaloisField(m, default_primitive_poly(m)) {}

GaloisField::GaloisField(int m, std::uint32_t prim_poly) : m_(m), poly_(prim_poly) {
    check_degree(m);
    if (!is_primitive_poly(m, prim_poly))
        throw std::invalid_argument("polynomial " + std::to_string(prim_poly) + " is not primitive of degree " +
                                    std::to_string(m));
    order_ = (1u << m) - 1;
    exp_.resize(2 * static_cast<std::size_t>(order_));
    log_.assign(static_cast<std::size_t>(order_) + 1, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        exp_[i] = v;
        exp_[i + order_] = v;
        log_[v] = i;
        v <<= 1;
        if (v >> m) v ^= prim_poly;
    }
}

std::uint32_t GaloisField::log(GfElement a) const {
    if (a.is_zero()) throw domain_error("log of zero in GF(2^m)");
    return log_[a.bits];
}

GfElement GaloisField::inv(GfElement a) const {
    if (a.is_zero()) throw domain_error("zero has no inverse in GF(2^m)");
    return {exp_[(order_ - log_[a.bits]) % order_]};
}

GfElement GaloisField::pow(GfElement a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e < 0) throw domain_error("negative power of zero in GF(2^m)");
        return {e == 0 ? 1u : 0u};
    }
    const auto l = static_cast<std::int64_t>(log_[a.bits]);
    // l * e may overflow for huge e; reduce e first.
    const auto er = e % static_cast<std::int64_t>(order_);
    return alpha_pow(l * er);
}

GfElement gf_mul_slow(GfElement a, GfElement b, int m, std::uint32_t prim_poly) {
    std::uint64_t acc = 0;
    for (int i = 0; i < m; ++i)
        if ((b.bits >> i) & 1u) acc ^= static_cast<std::uint64_t>(a.bits) << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if ((acc >> d) & 1u) acc ^= static_cast<std::uint64_t>(prim_poly) << (d - m);
    return {static_cast<std::uint32_t>(acc)};
}

}  // namespace pstego
