#include "pstego/puncture.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pstego/kernels.hpp"

namespace pstego {

namespace {

constexpr std::size_t kMaxPrefixBits = 24;

void check_punctured(std::size_t n, std::span<const std::size_t> punctured) {
    for (std::size_t i = 0; i < punctured.size(); ++i) {
        if (punctured[i] >= n) throw std::out_of_range("punctured position " + std::to_string(punctured[i]) + " >= " +
                                                       std::to_string(n));
        if (i > 0 && punctured[i] <= punctured[i - 1])
            throw std::invalid_argument("punctured positions must be strictly increasing");
    }
    if (punctured.size() > kMaxPrefixBits)
        throw std::invalid_argument("punctured decoding supports at most 24 punctured positions");
}

// Maps (y_short, prefix) to a parent word; built once per decode.
class Completer {
  public:
    Completer(std::size_t n, std::span<const std::size_t> punctured)
        : n_(n), punctured_(punctured.begin(), punctured.end()), kept_(kept_positions(n, punctured)) {}

    BitVector base(const BitVector& y_short) const {
        if (y_short.size() != kept_.size())
            throw std::invalid_argument("punctured word has length " + std::to_string(y_short.size()) +
                                        ", expected " + std::to_string(kept_.size()));
        BitVector y(n_);
        for (std::size_t j = 0; j < kept_.size(); ++j)
            if (y_short.get(j)) y.set(kept_[j]);
        return y;
    }
    BitVector with_prefix(BitVector base, std::uint64_t prefix) const {
        for (std::size_t i = 0; i < punctured_.size(); ++i)
            if ((prefix >> i) & 1u) base.set(punctured_[i]);
        return base;
    }
    BitVector shorten(const BitVector& c) const { return project(c, kept_); }
    std::size_t prefix_bits() const { return punctured_.size(); }

  private:
    std::size_t n_;
    std::vector<std::size_t> punctured_;
    std::vector<std::size_t> kept_;
};

}  // namespace

std::vector<std::size_t> kept_positions(std::size_t n, std::span<const std::size_t> punctured) {
    std::vector<bool> drop(n, false);
    for (auto p : punctured) drop.at(p) = true;
    std::vector<std::size_t> keep;
    keep.reserve(n - punctured.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) keep.push_back(i);
    return keep;
}

BitVector complete_word(const BitVector& y_short, std::span<const std::size_t> punctured, std::uint64_t prefix) {
    const Completer c(y_short.size() + punctured.size(), punctured);
    return c.with_prefix(c.base(y_short), prefix);
}

std::vector<BitVector> punctured_decode_list(std::span<const std::size_t> punctured, const BitVector& y_short,
                                             const Decoder& parent) {
    check_punctured(parent.length(), punctured);
    const Completer comp(parent.length(), punctured);
    const BitVector base = comp.base(y_short);
    std::vector<BitVector> out;
    const std::uint64_t prefixes = std::uint64_t{1} << punctured.size();
    for (std::uint64_t u = 0; u < prefixes; ++u) {
        const auto c = parent.decode(comp.with_prefix(base, u));
        if (!c) continue;
        BitVector shortened = comp.shorten(*c);
        if (std::find(out.begin(), out.end(), shortened) == out.end()) out.push_back(std::move(shortened));
    }
    return out;
}

PrunedDecodeResult punctured_decode_nearest(std::span<const std::size_t> punctured, const BitVector& y_short,
                                            const Decoder& parent) {
    check_punctured(parent.length(), punctured);
    const Completer comp(parent.length(), punctured);
    const BitVector base = comp.base(y_short);
    const int t = parent.capability();
    const std::size_t p = punctured.size();
    const std::uint64_t prefixes = std::uint64_t{1} << p;

    // reach[u] = distance from prefix u to the nearest tried prefix
    constexpr std::uint8_t kFar = 0xff;
    std::vector<std::uint8_t> reach(prefixes, kFar);

    PrunedDecodeResult res;
    std::uint64_t next = 0;
    for (;;) {
        ++res.decoder_calls;
        res.prefixes.push_back(next);
        if (const auto c = parent.decode(comp.with_prefix(base, next))) {
            BitVector shortened = comp.shorten(*c);
            const int d = static_cast<int>(distance(shortened, y_short));
            if (!res.codeword || d < res.distance) {
                res.codeword = std::move(shortened);
                res.distance = d;
            }
        }
        for (std::uint64_t u = 0; u < prefixes; ++u)
            reach[u] = std::min<std::uint8_t>(reach[u], static_cast<std::uint8_t>(std::popcount(u ^ next)));

        // A codeword closer than the incumbent would sit within t - best of a tried prefix.
        const int radius = res.codeword ? t - res.distance : -1;
        std::uint64_t farthest = 0;
        int farthest_reach = -1;
        for (std::uint64_t u = 0; u < prefixes; ++u) {
            if (reach[u] > farthest_reach) {
                farthest_reach = reach[u];
                farthest = u;
            }
        }
        if (farthest_reach <= radius || farthest_reach == 0) break;
        next = farthest;
    }
    return res;
}

PuncturedDecoder::PuncturedDecoder(std::shared_ptr<const Decoder> parent, std::vector<std::size_t> punctured)
    : parent_(std::move(parent)), punctured_(std::move(punctured)) {
    check_punctured(parent_->length(), punctured_);
}

DecodeOutcome PuncturedDecoder::decode(const BitVector& y) const {
    return punctured_decode_nearest(punctured_, y, *parent_).codeword;
}

LinearCode puncture_code(const LinearCode& code, std::span<const std::size_t> punctured) {
    return LinearCode::from_generator(delete_columns(code.generator(), punctured));
}

double PunctureResult::embedding_probability(int t) const {
    return static_cast<double>(child_table->cosets_within(t)) / static_cast<double>(child_table->size());
}

namespace {

// counts[i] += occurrences of coordinate i over the vectors feeding the greedy step.
std::uint64_t count_occurrences(const LinearCode& code, const CosetLeaderTable& table, int t, LeaderSet leaders,
                                std::vector<std::uint64_t>& counts) {
    const std::size_t n = code.length();
    counts.assign(std::max<std::size_t>(n, 64), 0);
    std::uint64_t seen = 0;
    const bool packed = n <= 64;
    std::vector<std::uint64_t> batch;
    batch.reserve(4096);
    auto flush = [&] {
        kernels::count_positions(batch, std::span<std::uint64_t, 64>(counts.data(), 64));
        batch.clear();
    };

    if (leaders == LeaderSet::canonical) {
        for (std::uint64_t s = 0; s < table.size(); ++s) {
            if (table.leader_weight(s) <= t) continue;
            ++seen;
            if (packed) {
                batch.push_back(table.leader_words(s)[0]);
                if (batch.size() == batch.capacity()) flush();
            } else {
                for (auto i : table.leader(s).support()) ++counts[i];
            }
        }
    } else {
        const auto& cols = code.column_syndromes();
        for (int w = t + 1; w <= table.covering_radius(); ++w) {
            for_each_weight_vector(cols, w, [&](std::span<const int> pos, std::uint64_t s) {
                if (table.leader_weight(s) != w) return true;
                ++seen;
                if (packed) {
                    std::uint64_t word = 0;
                    for (int i : pos) word |= std::uint64_t{1} << i;
                    batch.push_back(word);
                    if (batch.size() == batch.capacity()) flush();
                } else {
                    for (int i : pos) ++counts[static_cast<std::size_t>(i)];
                }
                return true;
            });
        }
    }
    if (packed && !batch.empty()) flush();
    counts.resize(n);
    return seen;
}

}  // namespace

PunctureResult find_puncture_set(std::shared_ptr<const LinearCode> code, const StopPolicy& policy,
                                 const PunctureOptions& options) {
    PunctureResult res;
    res.parent = code;
    res.child = code;
    res.child_table = std::make_shared<const CosetLeaderTable>(CosetLeaderTable::build(*code, options.limits));
    res.initial_rho = res.achieved_rho = res.child_table->covering_radius();

    const int t = policy.t;
    if (t < 0) throw std::invalid_argument("puncture: t must be non-negative");
    switch (policy.mode) {
        case StopMode::reach_t:
            if (t > res.initial_rho)
                throw std::invalid_argument("puncture: t = " + std::to_string(t) + " exceeds the covering radius " +
                                            std::to_string(res.initial_rho));
            break;
        case StopMode::target_probability:
            if (!(policy.p_target > 0.0 && policy.p_target <= 1.0))
                throw std::invalid_argument("puncture: target probability must lie in (0, 1]");
            if (policy.p_target <= res.embedding_probability(t))
                throw std::invalid_argument("puncture: target probability is already met by the unpunctured code");
            break;
        case StopMode::max_punctures:
            if (policy.p_max < 0) throw std::invalid_argument("puncture: max punctures must be >= 0");
            break;
    }

    auto done = [&] {
        switch (policy.mode) {
            case StopMode::reach_t: return res.achieved_rho <= t;
            case StopMode::target_probability: return res.embedding_probability(t) >= policy.p_target;
            case StopMode::max_punctures:
                return res.achieved_rho <= t || res.punctured.size() >= static_cast<std::size_t>(policy.p_max);
        }
        return true;
    };

    std::vector<std::size_t> kept = kept_positions(code->length(), {});
    std::vector<std::uint64_t> counts;
    std::size_t next_first = 0;
    while (!done() && kept.size() > 1) {
        PunctureStep step;
        std::size_t local = 0;
        if (options.first_positions) {
            const auto& order = code->info_positions();
            std::size_t target = 0;
            if (next_first < order.size()) {
                target = order[next_first++];
            } else {
                target = kept.front();
            }
            local = static_cast<std::size_t>(std::lower_bound(kept.begin(), kept.end(), target) - kept.begin());
        } else {
            step.candidates = count_occurrences(*res.child, *res.child_table, t, options.leaders, counts);
            local = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
            step.occurrences = counts[local];
        }
        step.position = kept[local];
        const std::size_t drop[1] = {local};
        res.child = std::make_shared<const LinearCode>(puncture_code(*res.child, drop));
        res.child_table =
            std::make_shared<const CosetLeaderTable>(CosetLeaderTable::build(*res.child, options.limits));
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(local));
        res.punctured.insert(std::upper_bound(res.punctured.begin(), res.punctured.end(), step.position),
                             step.position);
        res.achieved_rho = res.child_table->covering_radius();
        step.rho_after = res.achieved_rho;
        step.redundancy_after = res.child->redundancy();
        step.histogram_after = res.child_table->weight_distribution();
        res.trace.push_back(std::move(step));
    }

    switch (policy.mode) {
        case StopMode::target_probability: res.converged = res.embedding_probability(t) >= policy.p_target; break;
        default: res.converged = res.achieved_rho <= t; break;
    }
    return res;
}

SupportIntersectionResult support_intersection_check(const LinearCode& code, const CosetLeaderTable& table, int j,
                                      const TableLimits& limits) {
    SupportIntersectionResult out;
    out.j = j;
    out.rho = table.covering_radius();
    if (j < 0 || j > out.rho) throw std::invalid_argument("support_intersection_check: j must lie in [0, rho]");

    std::optional<std::vector<int>> common;
    const auto& cols = code.column_syndromes();
    for (int w = out.rho - j; w <= out.rho; ++w) {
        const bool whole = for_each_weight_vector(cols, w, [&](std::span<const int> pos, std::uint64_t s) {
            if (table.leader_weight(s) != w) return true;
            if (!common) {
                common.emplace(pos.begin(), pos.end());
            } else {
                std::vector<int> kept;
                std::set_intersection(common->begin(), common->end(), pos.begin(), pos.end(),
                                      std::back_inserter(kept));
                *common = std::move(kept);
            }
            return !common->empty();
        });
        if (!whole) break;
    }

    if (!common || common->empty()) {
        out.empty = true;
        out.bound = out.rho;
        out.actual = out.rho;
        out.ok = true;
        return out;
    }
    out.positions.assign(common->begin(), common->end());
    const LinearCode child = puncture_code(code, out.positions);
    out.actual = CosetLeaderTable::build(child, limits).covering_radius();
    out.bound = std::max(out.rho - j - 1, out.rho - static_cast<int>(out.positions.size()));
    out.ok = out.actual <= out.bound;
    return out;
}

Rational embedding_probability_exact(int n, int r, int t, int q) {
    BigInt qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    return Rational(ball_volume(q, n, std::min(t, n)), qr);
}

double embedding_probability(int n, int r, int t, int q) {
    return static_cast<double>(embedding_probability_exact(n, r, t, q));
}

}  // namespace pstego
