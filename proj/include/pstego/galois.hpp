#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pstego {

/// Element of GF(2^m) in polynomial basis; bit i is the coefficient of x^i.
struct GfElement {
    std::uint32_t bits = 0;

    friend constexpr bool operator==(GfElement, GfElement) = default;
    friend constexpr GfElement operator+(GfElement a, GfElement b) { return {a.bits ^ b.bits}; }
    constexpr bool is_zero() const { return bits == 0; }
};

class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Default primitive polynomial for GF(2^m), 2 <= m <= 16 (bit m set, bit 0 = constant term).
std::uint32_t default_primitive_poly(int m);

/// True when `poly` has degree m and x has multiplicative order 2^m - 1 modulo poly.
bool is_primitive_poly(int m, std::uint32_t poly);

/// GF(2^m) with precomputed log/antilog tables. Immutable after construction.
class GaloisField {
  public:
    explicit GaloisField(int m);
    GaloisField(int m, std::uint32_t prim_poly);

    int m() const { return m_; }
    std::uint32_t prim_poly() const { return poly_; }
    std::uint32_t order() const { return order_; }  // 2^m - 1
    std::uint32_t size() const { return order_ + 1; }

    bool contains(GfElement a) const { return a.bits <= order_; }

    GfElement alpha() const { return {2}; }
    GfElement alpha_pow(std::int64_t e) const {
        return {exp_[static_cast<std::size_t>(reduce_exponent(e))]};
    }
    /// Discrete log base alpha; zero has no log.
    std::uint32_t log(GfElement a) const;

    GfElement mul(GfElement a, GfElement b) const {
        if (a.is_zero() || b.is_zero()) return {};
        return {exp_[log_[a.bits] + log_[b.bits]]};
    }
    GfElement inv(GfElement a) const;
    GfElement div(GfElement a, GfElement b) const { return mul(a, inv(b)); }
    /// a^e with the exponent reduced mod 2^m - 1; 0^0 = 1, 0^e = 0 for e > 0.
    GfElement pow(GfElement a, std::int64_t e) const;

  private:
    std::uint32_t reduce_exponent(std::int64_t e) const {
        auto r = e % static_cast<std::int64_t>(order_);
        if (r < 0) r += order_;
        return static_cast<std::uint32_t>(r);
    }

    int m_;
    std::uint32_t poly_;
    std::uint32_t order_;
    std::vector<std::uint32_t> exp_;  // length 2*order, doubled to skip the mod in mul
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Carry-less multiply and reduce without tables. Used to cross-check the table path.
GfElement gf_mul_slow(GfElement a, GfElement b, int m, std::uint32_t prim_poly);

}  // namespace pstego
