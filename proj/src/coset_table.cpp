#include "pstego/coset_table.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

namespace pstego {

namespace {

constexpr char kMagic[4] = {'P', 'S', 'C', 'L'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::uint32_t kSyndromeConvention = 1;  // bit j of yH^T -> integer bit j
constexpr std::uint8_t kUnset = 0xff;

void put_u32(std::ostream& os, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::ostream& os, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint64_t get_le(std::istream& is, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
        const int c = is.get();
        if (c == EOF) throw std::runtime_error("coset table cache: truncated file");
        v |= static_cast<std::uint64_t>(c & 0xff) << (8 * i);
    }
    return v;
}

}  // namespace

TableLimits TableLimits::from_environment() {
    TableLimits l;
    if (const char* env = std::getenv("PSTEGO_CAP_BITS"); env != nullptr && *env != '\0') l.cap_bits = std::stoi(env);
    return l;
}

void check_table_limits(std::size_t n, std::size_t r, const TableLimits& limits) {
    if (r > static_cast<std::size_t>(limits.cap_bits))
        throw resource_error("coset table needs 2^" + std::to_string(r) + " entries, cap is 2^" +
                                 std::to_string(limits.cap_bits),
                             std::ldexp(1.0, static_cast<int>(r)));
    // The enumeration must reach at least the smallest radius whose ball covers
    // 2^r syndromes; budget one weight beyond it.
    const BigInt cosets = BigInt{1} << r;
    int w = 0;
    while (w < static_cast<int>(n) && ball_volume(2, static_cast<int>(n), w) < cosets) ++w;
    const int reach = std::min<int>(w + 1, static_cast<int>(n));
    const double work = static_cast<double>(ball_volume(2, static_cast<int>(n), reach));
    if (work > limits.work_budget)
        throw resource_error("coset enumeration would visit about " + std::to_string(work) + " vectors, budget is " +
                                 std::to_string(limits.work_budget),
                             work);
}

CosetLeaderTable CosetLeaderTable::build(const LinearCode& code, const TableLimits& limits) {
    const std::size_t n = code.length();
    const std::size_t r = code.redundancy();
    check_table_limits(n, r, limits);

    CosetLeaderTable t;
    t.n_ = n;
    t.r_ = static_cast<int>(r);
    t.wpl_ = std::max<std::size_t>(1, BitVector::word_count(n));
    const std::size_t cosets = std::size_t{1} << r;
    t.leaders_.assign(cosets * t.wpl_, 0);
    t.weights_.assign(cosets, kUnset);

    const auto& cols = code.column_syndromes();
    std::size_t filled = 0;
    for (int w = 0; w <= static_cast<int>(n) && filled < cosets; ++w) {
        for_each_weight_vector(cols, w, [&](std::span<const int> pos, std::uint64_t s) {
            if (t.weights_[s] != kUnset) return true;
            t.weights_[s] = static_cast<std::uint8_t>(w);
            std::uint64_t* dst = t.leaders_.data() + s * t.wpl_;
            for (int p : pos) dst[p >> 6] |= std::uint64_t{1} << (p & 63);
            return ++filled < cosets;
        });
    }
    t.finish();
    return t;
}

void CosetLeaderTable::finish() {
    histogram_.clear();
    for (auto w : weights_) {
        if (w == kUnset) throw std::logic_error("coset table has an unfilled syndrome");
        if (w >= histogram_.size()) histogram_.resize(w + 1u, 0);
        ++histogram_[w];
    }
}

BitVector CosetLeaderTable::leader(std::uint64_t s) const {
    BitVector v(n_);
    const auto src = leader_words(s);
    auto dst = v.words();
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(dst.size()), dst.begin());
    return v;
}

Rational CosetLeaderTable::average_radius() const {
    BigInt total = 0;
    for (std::size_t j = 0; j < histogram_.size(); ++j) total += BigInt(histogram_[j]) * j;
    return Rational(total, BigInt(size()));
}

Rational CosetLeaderTable::average_radius_within(int t) const {
    BigInt total = 0;
    BigInt count = 0;
    for (std::size_t j = 0; j < histogram_.size() && static_cast<int>(j) <= t; ++j) {
        total += BigInt(histogram_[j]) * j;
        count += histogram_[j];
    }
    return Rational(total, count);
}

std::uint64_t CosetLeaderTable::cosets_within(int t) const {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < histogram_.size() && static_cast<int>(j) <= t; ++j) c += histogram_[j];
    return c;
}

void CosetLeaderTable::save(const std::filesystem::path& path, const LinearCode& code) const {
    if (code.length() != n_ || static_cast<int>(code.redundancy()) != r_)
        throw std::invalid_argument("coset table does not belong to this code");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os.write(kMagic, 4);
    put_u32(os, kFormatVersion);
    put_u32(os, static_cast<std::uint32_t>(n_));
    put_u32(os, static_cast<std::uint32_t>(code.dimension()));
    put_u32(os, kSyndromeConvention);
    put_u32(os, static_cast<std::uint32_t>(wpl_));
    for (auto c : code.column_syndromes()) put_u64(os, c);
    for (auto w : leaders_) put_u64(os, w);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

CosetLeaderTable CosetLeaderTable::load(const std::filesystem::path& path, const LinearCode& code) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || !std::equal(magic, magic + 4, kMagic)) throw std::runtime_error("not a coset table cache file");
    if (get_le(is, 4) != kFormatVersion) throw std::runtime_error("unsupported coset table cache version");
    const auto n = get_le(is, 4);
    const auto k = get_le(is, 4);
    if (get_le(is, 4) != kSyndromeConvention) throw std::runtime_error("unsupported syndrome convention");
    const auto wpl = get_le(is, 4);
    if (n != code.length() || k != code.dimension()) throw std::runtime_error("cache file is for a different code");
    for (auto c : code.column_syndromes())
        if (get_le(is, 8) != c) throw std::runtime_error("cache file parity-check matrix differs from the code's");

    CosetLeaderTable t;
    t.n_ = n;
    t.r_ = static_cast<int>(code.redundancy());
    t.wpl_ = wpl;
    const std::size_t cosets = std::size_t{1} << t.r_;
    t.leaders_.resize(cosets * wpl);
    for (auto& w : t.leaders_) w = get_le(is, 8);
    t.weights_.resize(cosets);
    const auto& cols = code.column_syndromes();
    for (std::size_t s = 0; s < cosets; ++s) {
        std::uint64_t syn = 0;
        int weight = 0;
        for (std::size_t wi = 0; wi < wpl; ++wi)
            for (std::uint64_t b = t.leaders_[s * wpl + wi]; b != 0; b &= b - 1) {
                syn ^= cols[wi * 64 + static_cast<std::size_t>(std::countr_zero(b))];
                ++weight;
            }
        if (syn != s) throw std::runtime_error("cache file leader has the wrong syndrome");
        t.weights_[s] = static_cast<std::uint8_t>(weight);
    }
    t.finish();
    return t;
}

}  // namespace pstego
