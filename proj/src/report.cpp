#include "pstego/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pstego/kernels.hpp"

namespace pstego {

using ojson = nlohmann::ordered_json;

namespace {

std::string fixed(double v, int digits = 3) { return fmt::format("{:.{}f}", v, digits); }

template <typename T>
std::string opt_fixed(const std::optional<T>& v, int digits = 3) {
    return v ? fixed(static_cast<double>(*v), digits) : "n/a";
}

template <typename T>
ojson opt_json(const std::optional<T>& v) {
    return v ? ojson(static_cast<double>(*v)) : ojson(nullptr);
}

std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string one_based(const std::vector<std::size_t>& positions) {
    std::string out = "{";
    for (std::size_t i = 0; i < positions.size(); ++i) out += (i ? "," : "") + std::to_string(positions[i] + 1);
    return out + "}";
}

ojson one_based_json(const std::vector<std::size_t>& positions) {
    ojson out = ojson::array();
    for (auto p : positions) out.push_back(p + 1);
    return out;
}

ojson params_json(const SchemeParams& p) {
    ojson j;
    j["n"] = p.n;
    j["r"] = p.r;
    j["a"] = p.a;
    j["T"] = p.T ? ojson(*p.T) : ojson(nullptr);
    j["T_avg"] = opt_json(p.T_avg);
    j["T_avg_exact"] = p.T_avg ? ojson(rational_string(*p.T_avg)) : ojson(nullptr);
    j["T_avg_all"] = opt_json(p.T_avg_all);
    j["R"] = opt_json(p.R);
    j["R_avg"] = opt_json(p.R_avg);
    j["e"] = opt_json(p.e);
    j["e_avg"] = opt_json(p.e_avg);
    j["e_avg_all"] = opt_json(p.e_avg_all);
    j["p_S"] = p.p_S;
    j["p_S_exact"] = rational_string(p.p_S_exact);
    j["e_rel"] = opt_json(p.e_rel);
    j["e_avg_rel"] = opt_json(p.e_avg_rel);
    j["e_avg_all_rel"] = opt_json(p.e_avg_all_rel);
    return j;
}

// Covering radius of BCH_m(t) for the two families the tables cover, used when
// the coset table is out of reach.
std::optional<int> known_bch_covering_radius(int m, int t) {
    if (t == 2 && m >= 3) return 3;
    if (t == 3 && m >= 4) return 5;
    return std::nullopt;
}

SchemeParams analytic_bch_params(int m, int t) {
    const int n = (1 << m) - 1;
    const int r = static_cast<int>(bch_redundancy(m, t));
    SchemeParams p;
    p.n = n;
    p.r = r;
    p.a = static_cast<double>(r) / n;
    p.T = known_bch_covering_radius(m, t);
    p.p_S_exact = embedding_probability_exact(n, r, t);
    p.p_S = static_cast<double>(p.p_S_exact);
    if (p.T) {
        p.R = static_cast<double>(*p.T) / n;
        p.e = static_cast<double>(r) / *p.T;
        p.e_rel = *p.e * p.p_S;
    }
    return p;
}

std::string stop_mode_name(StopMode m) {
    switch (m) {
        case StopMode::reach_t: return "reach_t";
        case StopMode::target_probability: return "target_p";
        case StopMode::max_punctures: return "max_p";
    }
    return "unknown";
}

}  // namespace

std::string code_label(const CodeSpec& spec) {
    if (spec.family == Family::hamming) return fmt::format("Hamming_{}", spec.m);
    return fmt::format("BCH_{}({})", spec.m, spec.t);
}

BuiltCode build_code(const CodeSpec& spec) {
    BuiltCode b;
    b.spec = spec;
    if (spec.family == Family::hamming) {
        if (spec.m < 2 || spec.m > 16) throw std::invalid_argument("Hamming: m must be in [2, 16]");
        b.code = std::make_shared<const LinearCode>(hamming_code(spec.m));
        b.table = std::make_shared<const CosetLeaderTable>(CosetLeaderTable::build(*b.code));
        b.decoder = std::make_shared<const CosetTableDecoder>(b.code, b.table);
        b.t = 1;
        b.spec.t = 1;
    } else {
        b.bch = std::make_shared<const BchCode>(spec.m, spec.t);
        b.code = b.bch->code_ptr();
        b.decoder = std::make_shared<const BchDecoder>(b.bch);
        b.t = spec.t;
    }
    return b;
}

BuiltScheme build_scheme(const CodeSpec& spec, SchemeChoice choice, const StopPolicy& policy,
                         const PunctureOptions& options) {
    BuiltScheme s;
    s.parent = build_code(spec);
    switch (choice) {
        case SchemeChoice::table: {
            auto table = s.parent.table ? s.parent.table
                                        : std::make_shared<const CosetLeaderTable>(
                                              CosetLeaderTable::build(*s.parent.code, options.limits));
            s.scheme = StegoScheme::from_table(s.parent.code, std::move(table));
            break;
        }
        case SchemeChoice::bounded:
            if (!s.parent.bch) throw std::invalid_argument("bounded schemes need a BCH code");
            s.scheme = StegoScheme::from_bch(s.parent.bch);
            break;
        case SchemeChoice::punctured: {
            StopPolicy p = policy;
            p.t = s.parent.t;
            s.puncture = find_puncture_set(s.parent.code, p, options);
            s.scheme = StegoScheme::from_puncture(*s.puncture, s.parent.decoder);
            break;
        }
    }
    return s;
}

std::vector<Table1Row> table1_rows(int m_lo, int m_hi) {
    std::vector<Table1Row> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        const int n = (1 << m) - 1;
        const int r = static_cast<int>(bch_redundancy(m, 3));
        rows.push_back({m, n, r, syndrome_table_size_mb(n, r)});
    }
    return rows;
}

std::vector<Table2Row> table2_rows(int m_lo, int m_hi, const TableLimits& limits) {
    std::vector<Table2Row> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        Table2Row row;
        row.m = m;
        const int n = (1 << m) - 1;
        const int r = static_cast<int>(bch_redundancy(m, 3));
        try {
            check_table_limits(static_cast<std::size_t>(n), static_cast<std::size_t>(r), limits);
            auto bch = std::make_shared<const BchCode>(m, 3);
            const auto table = CosetLeaderTable::build(bch->code(), limits);
            row.params = scheme_params(StegoScheme::from_bch(bch), &table);
            row.exact = true;
        } catch (const resource_error&) {
            row.params = analytic_bch_params(m, 3);
        }
        row.p_S_cube = static_cast<double>(Rational(ball_volume(2, n, 3), BigInt(1) << (3 * m)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PunctureRow> tables34_rows(int m_lo, int m_hi, const std::vector<int>& ts, const PunctureOptions& options) {
    std::vector<PunctureRow> rows;
    for (int t : ts) {
        for (int m = m_lo; m <= m_hi; ++m) {
            PunctureRow row;
            row.m = m;
            row.t = t;
            auto bch = std::make_shared<const BchCode>(m, t);
            try {
                const auto table = CosetLeaderTable::build(bch->code(), options.limits);
                row.parent = scheme_params(StegoScheme::from_bch(bch), &table);
                StopPolicy policy;
                policy.t = t;
                const auto res = find_puncture_set(bch->code_ptr(), policy, options);
                const auto child = StegoScheme::from_puncture(res, std::make_shared<const BchDecoder>(bch));
                row.child = scheme_params(child, res.child_table.get());
                row.punctured = res.punctured;
                row.converged = res.converged;
                row.exact = true;
            } catch (const resource_error&) {
                row.parent = analytic_bch_params(m, t);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string params_csv_header() { return "m,n,r,a,T,T_avg,R,R_avg,e,e_avg,p_S,e_rel,e_avg_rel"; }

std::string params_csv_row(int m, const SchemeParams& p) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}", m, p.n, p.r, fixed(p.a),
                       p.T ? std::to_string(*p.T) : "n/a", opt_fixed(p.T_avg), opt_fixed(p.R), opt_fixed(p.R_avg),
                       opt_fixed(p.e), opt_fixed(p.e_avg), fixed(p.p_S), opt_fixed(p.e_rel), opt_fixed(p.e_avg_rel));
}

std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat fmt) {
    std::string out;
    switch (fmt) {
        case OutputFormat::json: {
            ojson j = ojson::array();
            for (const auto& r : rows) j.push_back({{"m", r.m}, {"n", r.n}, {"r", r.r}, {"size_mb", r.size_mb}});
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv:
            out = "m,n,r,size_mb\n";
            for (const auto& r : rows) out += fmt::format("{},{},{},{}\n", r.m, r.n, r.r, fixed(r.size_mb));
            return out;
        case OutputFormat::text:
            out = fmt::format("{:>3} {:>5} {:>4} {:>16}\n", "m", "n", "r", "size (Mb)");
            for (const auto& r : rows) out += fmt::format("{:>3} {:>5} {:>4} {:>16}\n", r.m, r.n, r.r, fixed(r.size_mb));
            return out;
    }
    return out;
}

std::string render_table2(const std::vector<Table2Row>& rows, OutputFormat fmt) {
    std::string out;
    switch (fmt) {
        case OutputFormat::json: {
            ojson j = ojson::array();
            for (const auto& r : rows) {
                ojson row;
                row["m"] = r.m;
                row["source"] = r.exact ? "exact" : "analytic";
                row["params"] = params_json(r.params);
                row["p_S_cube"] = r.p_S_cube;
                row["e_rel_cube"] = r.params.e ? ojson(*r.params.e * r.p_S_cube) : ojson(nullptr);
                row["e_avg_all_rel_cube"] =
                    r.params.e_avg_all ? ojson(*r.params.e_avg_all * r.p_S_cube) : ojson(nullptr);
                j.push_back(std::move(row));
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv:
            out = params_csv_header() + ",T_avg_all,e_avg_all,p_S_cube,e_rel_cube,e_avg_all_rel_cube,source\n";
            for (const auto& r : rows) {
                const auto& p = r.params;
                out += params_csv_row(r.m, p) +
                       fmt::format(",{},{},{},{},{},{}\n", opt_fixed(p.T_avg_all), opt_fixed(p.e_avg_all),
                                   fixed(r.p_S_cube), p.e ? fixed(*p.e * r.p_S_cube) : "n/a",
                                   p.e_avg_all ? fixed(*p.e_avg_all * r.p_S_cube) : "n/a",
                                   r.exact ? "exact" : "analytic");
            }
            return out;
        case OutputFormat::text:
            out = "Bounded BCH_m(3) schemes. T~ averages every coset; p_S counts 2^{3m} cosets.\n";
            out += fmt::format("{:>3} {:>5} {:>4} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7} | {:>10} {:>9} {}\n", "m", "n",
                               "r", "T~", "e", "e~", "p_S", "e_rel", "e~_rel", "T~(dec)", "p_S(2^r)", "source");
            for (const auto& r : rows) {
                const auto& p = r.params;
                out += fmt::format("{:>3} {:>5} {:>4} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7} | {:>10} {:>9} {}\n", r.m,
                                   p.n, p.r, opt_fixed(p.T_avg_all, 2), opt_fixed(p.e), opt_fixed(p.e_avg_all),
                                   fixed(r.p_S_cube), p.e ? fixed(*p.e * r.p_S_cube) : "n/a",
                                   p.e_avg_all ? fixed(*p.e_avg_all * r.p_S_cube) : "n/a", opt_fixed(p.T_avg, 2),
                                   fixed(p.p_S), r.exact ? "exact" : "analytic");
            }
            return out;
    }
    return out;
}

std::string render_tables34(const std::vector<PunctureRow>& rows, OutputFormat fmt) {
    std::string out;
    switch (fmt) {
        case OutputFormat::json: {
            ojson j = ojson::array();
            for (const auto& r : rows) {
                ojson row;
                row["m"] = r.m;
                row["t"] = r.t;
                row["source"] = r.exact ? "exact" : "analytic";
                row["parent"] = params_json(r.parent);
                row["punctured"] = r.child ? params_json(*r.child) : ojson(nullptr);
                row["positions"] = one_based_json(r.punctured);
                row["converged"] = r.converged;
                j.push_back(std::move(row));
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv:
            out = params_csv_header() + ",t,scheme,positions\n";
            for (const auto& r : rows) {
                out += params_csv_row(r.m, r.parent) + fmt::format(",{},bounded,\n", r.t);
                if (r.child)
                    out += params_csv_row(r.m, *r.child) +
                           fmt::format(",{},punctured,\"{}\"\n", r.t, one_based(r.punctured));
            }
            return out;
        case OutputFormat::text: {
            const auto cells = [](const SchemeParams& p) {
                const std::optional<double> r_avg =
                    p.T_avg_all ? std::optional<double>(static_cast<double>(*p.T_avg_all) / p.n) : std::nullopt;
                return fmt::format("{:>5} {:>4} {:>6} {:>7} {:>6} {:>6}", p.n, p.r, fixed(p.a), opt_fixed(r_avg, 4),
                                   opt_fixed(p.e, 2), opt_fixed(p.e_avg_all, 3));
            };
            int current_t = -1;
            for (const auto& r : rows) {
                if (r.t != current_t) {
                    current_t = r.t;
                    out += fmt::format("{}BCH_m({}) and punctured BCH_m({}); R~ and e~ average every coset\n",
                                       out.empty() ? "" : "\n", r.t, r.t);
                    out += fmt::format("{:>3} | {:>5} {:>4} {:>6} {:>7} {:>6} {:>6} | {:>5} {:>4} {:>6} {:>7} {:>6} "
                                       "{:>6} | {}\n",
                                       "m", "n", "r", "a", "R~", "e", "e~", "n'", "r'", "a'", "R~'", "e'", "e~'", "P");
                }
                out += fmt::format("{:>3} | {} | ", r.m, cells(r.parent));
                if (r.child) {
                    SchemeParams c = *r.child;
                    c.e = static_cast<double>(c.r) / r.t;
                    out += fmt::format("{} | {}{}\n", cells(c), one_based(r.punctured),
                                       r.converged ? "" : " (not converged)");
                } else {
                    out += "beyond limits\n";
                }
            }
            return out;
        }
    }
    return out;
}

std::string render_puncture(const CodeSpec& spec, const StopPolicy& policy, const PunctureResult& res,
                            OutputFormat fmt) {
    const LinearCode& parent = *res.parent;
    const LinearCode& child = *res.child;
    const double p_s = res.embedding_probability(policy.t);
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["code"] = code_label(spec);
            j["policy"] = {{"mode", stop_mode_name(policy.mode)},
                           {"t", policy.t},
                           {"p_target", policy.p_target},
                           {"p_max", policy.p_max}};
            j["parent"] = {{"n", parent.length()}, {"r", parent.redundancy()}, {"rho", res.initial_rho}};
            ojson trace = ojson::array();
            for (std::size_t i = 0; i < res.trace.size(); ++i) {
                const auto& s = res.trace[i];
                trace.push_back({{"step", i + 1},
                                 {"position", s.position + 1},
                                 {"occurrences", s.occurrences},
                                 {"candidates", s.candidates},
                                 {"rho_after", s.rho_after},
                                 {"r_after", s.redundancy_after},
                                 {"histogram_after", s.histogram_after}});
            }
            j["trace"] = std::move(trace);
            j["positions"] = one_based_json(res.punctured);
            j["punctured"] = {{"n", child.length()},
                              {"r", child.redundancy()},
                              {"rho", res.achieved_rho},
                              {"e", static_cast<double>(child.redundancy()) / policy.t},
                              {"p_S", p_s}};
            j["converged"] = res.converged;
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "step,position,occurrences,candidates,rho_after,r_after\n";
            for (std::size_t i = 0; i < res.trace.size(); ++i) {
                const auto& s = res.trace[i];
                out += fmt::format("{},{},{},{},{},{}\n", i + 1, s.position + 1, s.occurrences, s.candidates,
                                   s.rho_after, s.redundancy_after);
            }
            return out;
        }
        case OutputFormat::text: {
            std::string out = fmt::format("{}: n={} r={} rho={}; mode {} with t={}\n", code_label(spec),
                                          parent.length(), parent.redundancy(), res.initial_rho,
                                          stop_mode_name(policy.mode), policy.t);
            for (std::size_t i = 0; i < res.trace.size(); ++i) {
                const auto& s = res.trace[i];
                std::string hist;
                for (auto a : s.histogram_after) hist += (hist.empty() ? "" : " ") + std::to_string(a);
                out += fmt::format("  step {}: position {} ({} of {} vectors) -> rho {}, r {}, A = [{}]\n", i + 1,
                                   s.position + 1, s.occurrences, s.candidates, s.rho_after, s.redundancy_after, hist);
            }
            out += fmt::format("P = {}  n'={} r'={} rho'={} e'=r'/t={} p_S={} {}\n", one_based(res.punctured),
                               child.length(), child.redundancy(), res.achieved_rho,
                               fixed(static_cast<double>(child.redundancy()) / policy.t), fixed(p_s),
                               res.converged ? "converged" : "not converged");
            return out;
        }
    }
    return {};
}

std::string render_params(const std::string& label, const SchemeParams& p, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["scheme"] = label;
            j["params"] = params_json(p);
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: return params_csv_header() + "\n" + params_csv_row(0, p) + "\n";
        case OutputFormat::text:
            return fmt::format("{}: n={} r={} a={} T={} T~={} e={} e~={} p_S={} e_rel={} e~_rel={}\n", label, p.n, p.r,
                               fixed(p.a), p.T ? std::to_string(*p.T) : "n/a", opt_fixed(p.T_avg), opt_fixed(p.e),
                               opt_fixed(p.e_avg), fixed(p.p_S), opt_fixed(p.e_rel), opt_fixed(p.e_avg_rel));
    }
    return {};
}

SampledProbability sample_embedding_probability(const BuiltCode& b, std::uint64_t trials, std::uint64_t seed) {
    const StegoScheme scheme(b.code, b.decoder, b.bch ? SchemeKind::bounded_bch : SchemeKind::coset_table);
    return {trials, seed, empirical_probability(scheme, trials, seed)};
}

std::string render_info(const BuiltCode& b, const TableLimits& limits, OutputFormat fmt,
                        const std::optional<SampledProbability>& sampled) {
    const LinearCode& c = *b.code;
    std::optional<int> dmin;
    if (c.dimension() <= 30 && c.length() <= 64) dmin = minimum_distance(c);
    std::optional<CosetLeaderTable> table;
    try {
        table = CosetLeaderTable::build(c, limits);
    } catch (const resource_error&) {
    }
    const std::string gen = b.bch ? b.bch->generator_poly().to_string() : "";

    if (fmt == OutputFormat::json) {
        ojson j;
        j["code"] = code_label(b.spec);
        j["n"] = c.length();
        j["k"] = c.dimension();
        j["r"] = c.redundancy();
        j["d_min"] = dmin ? ojson(*dmin) : ojson(nullptr);
        j["t"] = b.t;
        if (b.bch) j["generator_poly"] = gen;
        j["info_positions"] = one_based_json(c.info_positions());
        if (table) {
            j["covering_radius"] = table->covering_radius();
            j["average_radius"] = static_cast<double>(table->average_radius());
            j["average_radius_exact"] = rational_string(table->average_radius());
            j["weight_distribution"] = table->weight_distribution();
        } else {
            j["covering_radius"] = nullptr;
        }
        if (sampled)
            j["sampled_p_S"] = {{"trials", sampled->trials}, {"seed", sampled->seed}, {"value", sampled->value}};
        return j.dump(2) + "\n";
    }
    std::string out;
    if (fmt == OutputFormat::csv) {
        out = "code,n,k,r,d_min,t,rho,T_avg,sampled_p_S\n";
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", code_label(b.spec), c.length(), c.dimension(), c.redundancy(),
                           dmin ? std::to_string(*dmin) : "n/a", b.t,
                           table ? std::to_string(table->covering_radius()) : "n/a",
                           table ? fixed(static_cast<double>(table->average_radius())) : "n/a",
                           sampled ? fixed(sampled->value) : "n/a");
        return out;
    }
    out = fmt::format("{}: [n={}, k={}], r={}, d_min={}, t={}\n", code_label(b.spec), c.length(), c.dimension(),
                      c.redundancy(), dmin ? std::to_string(*dmin) : "n/a", b.t);
    if (b.bch) out += fmt::format("generator (x^0 first): {}\n", gen);
    out += fmt::format("information positions: {}\n", one_based(c.info_positions()));
    if (table) {
        std::string hist;
        for (auto a : table->weight_distribution()) hist += (hist.empty() ? "" : " ") + std::to_string(a);
        out += fmt::format("covering radius {}, average radius {} ({}), leader weights A = [{}]\n",
                           table->covering_radius(), fixed(static_cast<double>(table->average_radius()), 4),
                           rational_string(table->average_radius()), hist);
    } else {
        out += "coset table beyond limits; covering radius not computed\n";
    }
    if (sampled)
        out += fmt::format("embedding probability {} over {} sampled pairs (seed {})\n", fixed(sampled->value),
                           sampled->trials, sampled->seed);
    return out;
}

// ---------------------------------------------------------------------------
// verify suites

namespace {

using Checks = std::vector<VerifyCheck>;

void add(Checks& out, const std::string& suite, const std::string& name, bool ok, std::string detail = {}) {
    out.push_back({suite, name, ok, std::move(detail)});
}

void verify_galois(Checks& out) {
    for (int m = 2; m <= 8; ++m) {
        const GaloisField f(m);
        bool mul_ok = true;
        bool inv_ok = true;
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            for (std::uint32_t b = 0; b < f.size(); ++b)
                mul_ok = mul_ok && f.mul({a}, {b}) == gf_mul_slow({a}, {b}, m, f.prim_poly());
            if (a != 0) inv_ok = inv_ok && f.mul({a}, f.inv({a})) == GfElement{1};
        }
        add(out, "galois", fmt::format("GF(2^{}) table multiplication matches carry-less product", m), mul_ok);
        add(out, "galois", fmt::format("GF(2^{}) inverses", m), inv_ok);
        add(out, "galois", fmt::format("GF(2^{}) default polynomial is primitive", m),
            is_primitive_poly(m, f.prim_poly()));
    }
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng() & 1u) m.set(i, j);
    return m;
}

void verify_linalg(Checks& out) {
    std::mt19937_64 rng(7);
    bool rank_ok = true;
    bool null_ok = true;
    bool code_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 12;
        const std::size_t cols = 1 + rng() % 20;
        const BitMatrix m = random_matrix(rng, rows, cols);
        const auto e = rref(m);
        rank_ok = rank_ok && e.rank == rank(m.transpose()) && e.rank == independent_rows(m).rows();
        const BitMatrix ns = null_space(m);
        null_ok = null_ok && ns.rows() == cols - e.rank && (ns.rows() == 0 || m.mul_transpose(ns).is_zero());
        if (e.rank > 0) {
            const auto code = LinearCode::from_generator(m);
            code_ok = code_ok && code.generator().mul_transpose(code.parity_check()).is_zero() &&
                      code.dimension() + code.redundancy() == cols;
        }
    }
    add(out, "linalg", "row rank equals column rank and basis size (200 random matrices)", rank_ok);
    add(out, "linalg", "null space is orthogonal and has dimension n - rank", null_ok);
    add(out, "linalg", "G H^T = 0 for codes from random generators", code_ok);
}

void verify_codes(Checks& out) {
    const auto ham = hamming_code(3);
    const auto table = CosetLeaderTable::build(ham);
    add(out, "codes", "Hamming [7,4] is perfect: covering radius 1", table.covering_radius() == 1);
    add(out, "codes", "Hamming [7,4] average radius 7/8", table.average_radius() == Rational(7, 8));
    add(out, "codes", "Hamming [7,4] minimum distance 3", minimum_distance(ham) == 3);
    for (int m = 4; m <= 6; ++m)
        for (int t = 2; t <= 3; ++t) {
            const BchCode bch(m, t);
            const auto& c = bch.code();
            add(out, "codes", fmt::format("BCH_{}({}) G H^T = 0, r = {}", m, t, bch_redundancy(m, t)),
                c.generator().mul_transpose(c.parity_check()).is_zero() && c.redundancy() == bch_redundancy(m, t));
        }
    const BchCode b42(4, 2);
    add(out, "codes", "BCH_4(2) minimum distance 5", minimum_distance(b42.code()) == 5);
}

void verify_bch(Checks& out) {
    for (int t = 2; t <= 3; ++t) {
        const BchCode bch(4, t);
        const auto table = CosetLeaderTable::build(bch.code());
        try {
            const auto ok = decode_success_count(bch, table);
            const auto expect = static_cast<std::uint64_t>(ball_volume(2, 15, t));
            add(out, "bch", fmt::format("BCH_4({}) decodes exactly the V(15,{}) = {} cosets within t", t, t, expect),
                ok == expect, fmt::format("decoded {}", ok));
        } catch (const std::logic_error& e) {
            add(out, "bch", fmt::format("BCH_4({}) decoder agrees with the coset table", t), false, e.what());
        }
    }
    std::mt19937_64 rng(11);
    for (auto [m, t] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 2}}) {
        const BchCode bch(m, t);
        const auto& c = bch.code();
        int bad = 0;
        for (int trial = 0; trial < 2000; ++trial) {
            BitVector info(c.dimension());
            for (std::size_t i = 0; i < info.size(); ++i) info.set(i, rng() & 1u);
            const BitVector cw = c.encode(info);
            BitVector y = cw;
            const int w = static_cast<int>(rng() % (t + 1));
            std::vector<std::size_t> pos(c.length());
            for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
            std::shuffle(pos.begin(), pos.end(), rng);
            for (int i = 0; i < w; ++i) y.flip(pos[static_cast<std::size_t>(i)]);
            const auto d = bm_decode(bch, y);
            if (!d || !(*d == cw)) ++bad;
        }
        add(out, "bch", fmt::format("BCH_{}({}) corrects 2000 random patterns of weight <= t", m, t), bad == 0,
            fmt::format("{} mismatches", bad));
    }
}

void verify_oracle(Checks& out) {
    auto bch = std::make_shared<const BchCode>(4, 3);
    StopPolicy policy;
    policy.t = 3;
    const auto res = find_puncture_set(bch->code_ptr(), policy);
    const BchDecoder parent(bch);
    const auto words = res.child->codeword_words();
    const std::size_t n = res.child->length();
    bool list_ok = true;
    bool nearest_ok = true;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        const BitVector yv = BitVector::from_word(y, n);
        const auto list = punctured_decode_list(res.punctured, yv, parent);
        std::vector<std::uint64_t> got;
        for (const auto& c : list) got.push_back(c.to_word());
        std::sort(got.begin(), got.end());
        std::vector<std::uint64_t> expect;
        for (auto c : words)
            if (std::popcount(c ^ y) <= 3) expect.push_back(c);
        std::sort(expect.begin(), expect.end());
        list_ok = list_ok && got == expect;
        const auto near = punctured_decode_nearest(res.punctured, yv, parent);
        nearest_ok = nearest_ok && near.codeword && near.distance == brute_force_nearest(words, y).distance;
    }
    add(out, "oracle", "punctured BCH_4(3): list decoding equals brute force on all received words", list_ok);
    add(out, "oracle", "punctured BCH_4(3): pruned decoding reaches the nearest distance", nearest_ok);
}

void verify_support(Checks& out, const TableLimits& limits) {
    std::vector<std::pair<std::string, LinearCode>> codes;
    codes.emplace_back("Hamming [7,4]", hamming_code(3));
    codes.emplace_back("BCH_4(2)", BchCode(4, 2).code());
    codes.emplace_back("BCH_4(3)", BchCode(4, 3).code());
    for (const auto& [name, code] : codes) {
        const auto table = CosetLeaderTable::build(code, limits);
        for (int j = 0; j < table.covering_radius(); ++j) {
            const auto r = support_intersection_check(code, table, j, limits);
            add(out, "support", fmt::format("{} j={}: rho' <= max(rho-j-1, rho-|P_j|)", name, j), r.ok,
                fmt::format("|P_j|={} bound={} actual={}", r.positions.size(), r.bound, r.actual));
        }
    }
}

void verify_stego(Checks& out) {
    auto ham = std::make_shared<const LinearCode>(hamming_code(3));
    auto ham_table = std::make_shared<const CosetLeaderTable>(CosetLeaderTable::build(*ham));
    const auto hs = StegoScheme::from_table(ham, ham_table);
    bool round = true;
    bool proper = true;
    for (std::uint64_t x = 0; x < 128; ++x)
        for (std::uint64_t m = 0; m < 8; ++m) {
            const auto cover = BitVector::from_word(x, 7);
            const auto msg = BitVector::from_word(m, 3);
            const auto s = hs.embed(cover, msg);
            round = round && s && hs.extract(*s) == msg;
            std::size_t best = 8;
            for (std::uint64_t v = 0; v < 128; ++v)
                if (ham->syndrome_word(BitVector::from_word(v, 7)) == m)
                    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(v ^ x)));
            proper = proper && s && distance(cover, *s) == best;
        }
    add(out, "stego", "Hamming [7,4]: round trip on all pairs", round);
    add(out, "stego", "Hamming [7,4]: embedding changes are minimal", proper);

    auto bch = std::make_shared<const BchCode>(4, 3);
    StopPolicy policy;
    policy.t = 3;
    const auto res = find_puncture_set(bch->code_ptr(), policy);
    const auto ps = StegoScheme::from_puncture(res, std::make_shared<const BchDecoder>(bch));
    std::mt19937_64 rng(3);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto cover = BitVector::from_word(rng() & 0xfff, 12);
        const auto msg = BitVector::from_word(rng() & 0x7f, 7);
        const auto s = ps.embed(cover, msg);
        if (!s || !(ps.extract(*s) == msg) || distance(cover, *s) > 3) ++failures;
    }
    add(out, "stego", "punctured BCH_4(3): 10^4 random pairs embed with <= 3 changes", failures == 0,
        fmt::format("{} failures", failures));
    add(out, "stego", "entropy bound at a = 1 is 2", entropy_bound(2, 1.0) == 2.0);
}

void verify_kernels(Checks& out) {
    using namespace kernels;
    std::mt19937_64 rng(5);
    const KernelTable& ref = table(Backend::scalar);
    for (Backend b : {Backend::avx2, Backend::neon}) {
        if (!backend_available(b)) continue;
        const KernelTable& k = table(b);
        bool ok = true;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t len = rng() % 300;
            std::vector<std::uint64_t> a(len);
            std::vector<std::uint64_t> c(len);
            for (auto& w : a) w = rng() & (rng() | rng());
            for (auto& w : c) w = rng();
            ok = ok && ref.popcount(a.data(), len) == k.popcount(a.data(), len);
            auto x1 = a;
            auto x2 = a;
            ref.xor_into(x1.data(), c.data(), len);
            k.xor_into(x2.data(), c.data(), len);
            ok = ok && x1 == x2;
            if (len > 0) {
                const std::uint64_t target = rng();
                const auto n1 = ref.nearest_word(a.data(), len, target);
                const auto n2 = k.nearest_word(a.data(), len, target);
                ok = ok && n1.index == n2.index && n1.distance == n2.distance;
            }
            std::vector<std::uint64_t> c1(64, 0);
            std::vector<std::uint64_t> c2(64, 0);
            ref.count_positions(a.data(), len, c1.data());
            k.count_positions(a.data(), len, c2.data());
            ok = ok && c1 == c2;
        }
        add(out, "kernels", fmt::format("{} kernels match the scalar reference", backend_name(b)), ok);
    }
    add(out, "kernels", fmt::format("active backend: {}", backend_name(active_backend())), true);
}

}  // namespace

std::vector<std::string> verify_suites() {
    return {"galois", "linalg", "codes", "bch", "oracle", "support", "stego", "kernels"};
}

std::vector<VerifyCheck> run_verify(const std::string& suite, const TableLimits& limits) {
    const std::vector<std::pair<std::string, std::function<void(Checks&)>>> suites = {
        {"galois", verify_galois},
        {"linalg", verify_linalg},
        {"codes", verify_codes},
        {"bch", verify_bch},
        {"oracle", verify_oracle},
        {"support", [&](Checks& c) { verify_support(c, limits); }},
        {"stego", verify_stego},
        {"kernels", verify_kernels},
    };
    Checks out;
    bool found = false;
    for (const auto& [name, fn] : suites) {
        if (suite == "all" || suite == name) {
            fn(out);
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("unknown verify suite '" + suite + "'");
    return out;
}

std::string render_verify(const std::vector<VerifyCheck>& checks, OutputFormat fmt) {
    std::size_t failed = 0;
    for (const auto& c : checks) failed += !c.ok;
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            ojson arr = ojson::array();
            for (const auto& c : checks)
                arr.push_back({{"suite", c.suite}, {"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            j["checks"] = std::move(arr);
            j["passed"] = checks.size() - failed;
            j["failed"] = failed;
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "suite,check,ok,detail\n";
            for (const auto& c : checks)
                out += fmt::format("{},\"{}\",{},\"{}\"\n", c.suite, c.name, c.ok ? "pass" : "fail", c.detail);
            return out;
        }
        case OutputFormat::text: {
            std::string out;
            for (const auto& c : checks)
                out += fmt::format("[{}] {}: {}{}\n", c.ok ? "PASS" : "FAIL", c.suite, c.name,
                                   c.detail.empty() ? "" : " (" + c.detail + ")");
            out += fmt::format("{} passed, {} failed\n", checks.size() - failed, failed);
            return out;
        }
    }
    return {};
}

}  // namespace pstego
