#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pstego/bch.hpp"
#include "pstego/puncture.hpp"
#include "pstego/stego.hpp"

namespace pstego {

enum class Family { bch, hamming };
enum class OutputFormat { text, csv, json };

struct CodeSpec {
    Family family = Family::bch;
    int m = 4;
    int t = 3;  // ignored for Hamming codes, whose decoders correct one error
};

std::string code_label(const CodeSpec& spec);

/// A code together with the decoder a scheme would use on it.
struct BuiltCode {
    CodeSpec spec;
    std::shared_ptr<const LinearCode> code;
    std::shared_ptr<const BchCode> bch;           // BCH family only
    std::shared_ptr<const CosetLeaderTable> table;  // Hamming family only
    std::shared_ptr<const Decoder> decoder;
    int t = 0;
};

BuiltCode build_code(const CodeSpec& spec);

enum class SchemeChoice { table, bounded, punctured };

struct BuiltScheme {
    BuiltCode parent;
    std::optional<PunctureResult> puncture;
    std::optional<StegoScheme> scheme;
};

/// Builds the scheme chosen for `spec`. Punctured schemes run the greedy search
/// with `policy`; the result is deterministic.
BuiltScheme build_scheme(const CodeSpec& spec, SchemeChoice choice, const StopPolicy& policy,
                         const PunctureOptions& options);

struct Table1Row {
    int m = 0;
    int n = 0;
    int r = 0;
    double size_mb = 0;
};
std::vector<Table1Row> table1_rows(int m_lo, int m_hi);

struct Table2Row {
    int m = 0;
    bool exact = false;        // coset table enumerated; otherwise analytic columns only
    SchemeParams params;       // bounded scheme over BCH_m(3)
    double p_S_cube = 0;       // V(n, 3) / 2^{3m}
};
/// Rows for the bounded BCH_m(3) schemes. Without the coset table T is taken
/// as 5, the covering radius of these codes for m >= 4.
std::vector<Table2Row> table2_rows(int m_lo, int m_hi, const TableLimits& limits);

struct PunctureRow {
    int m = 0;
    int t = 0;
    bool exact = false;
    SchemeParams parent;                 // bounded scheme over BCH_m(t)
    std::optional<SchemeParams> child;   // punctured scheme; empty when the search exceeds the limits
    std::vector<std::size_t> punctured;  // parent coordinates
    bool converged = false;
};
std::vector<PunctureRow> tables34_rows(int m_lo, int m_hi, const std::vector<int>& ts, const PunctureOptions& options);

std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat fmt);
std::string render_table2(const std::vector<Table2Row>& rows, OutputFormat fmt);
std::string render_tables34(const std::vector<PunctureRow>& rows, OutputFormat fmt);
std::string render_puncture(const CodeSpec& spec, const StopPolicy& policy, const PunctureResult& res,
                            OutputFormat fmt);
struct SampledProbability {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double value = 0;
};
/// Fraction of (cover, message) pairs the code's own decoder embeds, sampled with a seeded generator.
SampledProbability sample_embedding_probability(const BuiltCode& code, std::uint64_t trials, std::uint64_t seed);

std::string render_info(const BuiltCode& code, const TableLimits& limits, OutputFormat fmt,
                        const std::optional<SampledProbability>& sampled = std::nullopt);
std::string render_params(const std::string& label, const SchemeParams& p, OutputFormat fmt);

/// The 13 leading CSV columns shared by every parameter table.
std::string params_csv_header();
std::string params_csv_row(int m, const SchemeParams& p);

struct VerifyCheck {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Suites: galois, linalg, codes, bch, oracle, support, stego, kernels, all.
std::vector<VerifyCheck> run_verify(const std::string& suite, const TableLimits& limits);
std::vector<std::string> verify_suites();
std::string render_verify(const std::vector<VerifyCheck>& checks, OutputFormat fmt);

}  // namespace pstego
