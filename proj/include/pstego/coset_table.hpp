#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "pstego/code.hpp"

namespace pstego {

/// Raised when an exhaustive computation would exceed the configured limits.
class resource_error : public std::runtime_error {
  public:
    resource_error(const std::string& what, double required) : std::runtime_error(what), required_(required) {}
    /// Estimated size of the refused job (table entries or enumeration steps).
    double required() const { return required_; }

  private:
    double required_;
};

struct TableLimits {
    /// log2 of the largest table (number of cosets) that may be built.
    int cap_bits = 26;
    /// Largest number of candidate vectors the weight enumeration may visit.
    double work_budget = 4294967296.0;

    /// Defaults, with cap_bits overridden by PSTEGO_CAP_BITS when set.
    static TableLimits from_environment();
};

/// Visits every weight-w vector of length columns.size() as a sorted position
/// list together with its syndrome. Order is increasing left-to-right bit
/// string, so the first vector seen for a syndrome is its lexicographically
/// smallest member of that weight. The visitor returns false to stop; the
/// function returns false when stopped early.
template <class Visit>
bool for_each_weight_vector(std::span<const std::uint64_t> columns, int w, Visit&& visit) {
    const int n = static_cast<int>(columns.size());
    if (w < 0 || w > n) return true;
    if (w == 0) return visit(std::span<const int>{}, std::uint64_t{0});
    std::vector<int> pos(static_cast<std::size_t>(w));
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(w) + 1, 0);
    int d = 0;
    pos[0] = n - w;
    for (;;) {
        acc[d + 1] = acc[d] ^ columns[pos[d]];
        if (d + 1 < w) {
            ++d;
            pos[d] = n - w + d;
            continue;
        }
        if (!visit(std::span<const int>(pos), acc[w])) return false;
        // Step to the next tuple in decreasing lexicographic order.
        for (;;) {
            const int lo = d == 0 ? 0 : pos[d - 1] + 1;
            if (pos[d] > lo) {
                --pos[d];
                break;
            }
            if (d == 0) return true;
            --d;
        }
    }
}

/// Minimum-weight coset leaders of every syndrome of a code.
class CosetLeaderTable {
  public:
    /// Enumerates vectors by increasing weight; each syndrome keeps its first
    /// (lexicographically smallest) minimum-weight representative.
    static CosetLeaderTable build(const LinearCode& code, const TableLimits& limits = {});

    std::size_t length() const { return n_; }
    int redundancy() const { return r_; }
    std::size_t size() const { return weights_.size(); }
    std::size_t words_per_leader() const { return wpl_; }

    int leader_weight(std::uint64_t s) const { return weights_[s]; }
    std::span<const std::uint64_t> leader_words(std::uint64_t s) const {
        return {leaders_.data() + s * wpl_, wpl_};
    }
    BitVector leader(std::uint64_t s) const;

    int covering_radius() const { return static_cast<int>(histogram_.size()) - 1; }
    /// A_0..A_rho: number of cosets whose leader has weight j.
    const std::vector<std::uint64_t>& weight_distribution() const { return histogram_; }
    /// Mean leader weight over all 2^r cosets.
    Rational average_radius() const;
    /// Mean leader weight over the cosets with leader weight <= t.
    Rational average_radius_within(int t) const;
    /// Number of cosets with leader weight <= t.
    std::uint64_t cosets_within(int t) const;

    /// Binary cache file; see README for the layout.
    void save(const std::filesystem::path& path, const LinearCode& code) const;
    static CosetLeaderTable load(const std::filesystem::path& path, const LinearCode& code);

  private:
    CosetLeaderTable() = default;
    void finish();

    std::size_t n_ = 0;
    int r_ = 0;
    std::size_t wpl_ = 1;
    std::vector<std::uint64_t> leaders_;
    std::vector<std::uint8_t> weights_;
    std::vector<std::uint64_t> histogram_;
};

/// Checks that 2^r and the expected enumeration work fit the limits, throwing
/// resource_error with the offending estimate otherwise.
void check_table_limits(std::size_t n, std::size_t r, const TableLimits& limits);

inline int covering_radius(const LinearCode& code, const TableLimits& limits = {}) {
    return CosetLeaderTable::build(code, limits).covering_radius();
}
inline Rational average_radius(const LinearCode& code, const TableLimits& limits = {}) {
    return CosetLeaderTable::build(code, limits).average_radius();
}
inline std::vector<std::uint64_t> leader_weight_distribution(const LinearCode& code, const TableLimits& limits = {}) {
    return CosetLeaderTable::build(code, limits).weight_distribution();
}

}  // namespace pstego
