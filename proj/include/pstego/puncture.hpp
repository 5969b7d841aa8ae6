#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pstego/code.hpp"
#include "pstego/coset_table.hpp"
#include "pstego/decoder.hpp"

namespace pstego {

/// Rebuilds a received word of the parent code: the punctured coordinates take
/// the bits of `prefix` (bit i -> punctured[i]), the rest are y_short in order.
BitVector complete_word(const BitVector& y_short, std::span<const std::size_t> punctured, std::uint64_t prefix);

/// Complement of `punctured` within [0, n), increasing.
std::vector<std::size_t> kept_positions(std::size_t n, std::span<const std::size_t> punctured);

/// Decodes the punctured code by running `parent` on every completion of
/// y_short and projecting the results. The list contains every codeword of the
/// punctured code within parent.capability() of y_short; entries are distinct
/// and ordered by first discovery.
std::vector<BitVector> punctured_decode_list(std::span<const std::size_t> punctured, const BitVector& y_short,
                                             const Decoder& parent);

struct PrunedDecodeResult {
    std::optional<BitVector> codeword;  // nearest codeword of the punctured code
    int distance = -1;
    std::size_t decoder_calls = 0;
    std::vector<std::uint64_t> prefixes;  // completions tried, in order
};

/// Nearest-codeword decoding of the punctured code with pruning. Completions
/// are tried in farthest-first order starting from the all-zero prefix; the
/// search stops once the radius-(t - best) balls around the tried prefixes
/// cover every prefix, since any closer codeword would have been found. When
/// the punctured code has covering radius <= t a codeword is always returned.
PrunedDecodeResult punctured_decode_nearest(std::span<const std::size_t> punctured, const BitVector& y_short,
                                            const Decoder& parent);

/// Decoder for the punctured code built on a decoder of the parent.
class PuncturedDecoder final : public Decoder {
  public:
    PuncturedDecoder(std::shared_ptr<const Decoder> parent, std::vector<std::size_t> punctured);

    DecodeOutcome decode(const BitVector& y) const override;
    std::size_t length() const override { return parent_->length() - punctured_.size(); }
    int capability() const override { return parent_->capability(); }
    bool minimum_distance() const override { return false; }
    std::string_view name() const override { return "punctured"; }

    const std::vector<std::size_t>& punctured() const { return punctured_; }

  private:
    std::shared_ptr<const Decoder> parent_;
    std::vector<std::size_t> punctured_;
};

/// Code obtained by deleting the coordinates in `punctured`.
LinearCode puncture_code(const LinearCode& code, std::span<const std::size_t> punctured);

enum class StopMode { reach_t, target_probability, max_punctures };

struct StopPolicy {
    StopMode mode = StopMode::reach_t;
    int t = 0;
    double p_target = 1.0;  // target_probability
    int p_max = 0;          // max_punctures
};

/// Which vectors feed the position occurrence count of the greedy search.
enum class LeaderSet {
    all_minimum,  // every minimum-weight vector of each coset with leader weight > t
    canonical,    // only the table's leader of each such coset
};

struct PunctureOptions {
    LeaderSet leaders = LeaderSet::all_minimum;
    /// Puncture the parent's information positions in order instead of searching.
    bool first_positions = false;
    TableLimits limits{};
};

struct PunctureStep {
    std::size_t position = 0;  // index in the parent code
    std::uint64_t occurrences = 0;
    std::uint64_t candidates = 0;  // vectors counted this step
    int rho_after = 0;
    std::size_t redundancy_after = 0;
    std::vector<std::uint64_t> histogram_after;  // A_j of the punctured code
};

struct PunctureResult {
    std::shared_ptr<const LinearCode> parent;
    std::vector<std::size_t> punctured;  // sorted, parent coordinates
    std::shared_ptr<const LinearCode> child;
    std::shared_ptr<const CosetLeaderTable> child_table;
    int initial_rho = 0;
    int achieved_rho = 0;
    bool converged = false;
    std::vector<PunctureStep> trace;

    /// Fraction of cosets of the child whose leader weight is <= t.
    double embedding_probability(int t) const;
};

/// Greedy puncture-set search: while the policy is unmet, count how often each
/// position occurs in the supports of the minimum-weight vectors of cosets with
/// leader weight > t, puncture the most frequent one (ties: lowest index) and
/// recompute the covering radius.
PunctureResult find_puncture_set(std::shared_ptr<const LinearCode> code, const StopPolicy& policy,
                                 const PunctureOptions& options = {});

struct SupportIntersectionResult {
    int j = 0;
    int rho = 0;
    std::vector<std::size_t> positions;  // P_j, parent coordinates
    bool empty = false;                  // P_j was empty; nothing punctured
    int bound = 0;                       // max(rho - j - 1, rho - |P_j|)
    int actual = 0;                      // covering radius after puncturing at P_j
    bool ok = false;
};

/// P_j is the intersection of the supports of all minimum-weight vectors in
/// cosets with leader weight >= rho - j. Punctures at P_j and compares the new
/// covering radius with max(rho - j - 1, rho - |P_j|).
SupportIntersectionResult support_intersection_check(const LinearCode& code, const CosetLeaderTable& table, int j,
                                      const TableLimits& limits = {});

/// V_q(n, t) / q^r.
Rational embedding_probability_exact(int n, int r, int t, int q = 2);
double embedding_probability(int n, int r, int t, int q = 2);

}  // namespace pstego
