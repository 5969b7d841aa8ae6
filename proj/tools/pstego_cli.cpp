#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include "pstego/bitstream.hpp"
#include "pstego/report.hpp"

using namespace pstego;

namespace {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_resource = 2, exit_verification = 3, exit_embedding = 4 };

struct RunConfig {
    CodeSpec code;
    std::string mode = "reach_t";
    double p_target = 1.0;
    int p_max = 0;
    bool first_positions = false;
    std::string leaders = "all";
    OutputFormat format = OutputFormat::text;
    int cap_bits = 26;
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;
    std::string in_path;
    std::string out_path;
    std::string msg_path;
    SchemeChoice scheme = SchemeChoice::punctured;
    int m_from = 0;
    int m_to = 0;
    double rate = 0.5;
    int q = 2;
    std::string suite = "all";
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    write_file(cfg.out_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

TableLimits limits_of(const RunConfig& cfg) {
    TableLimits l;
    l.cap_bits = cfg.cap_bits;
    return l;
}

StopPolicy policy_of(const RunConfig& cfg) {
    StopPolicy p;
    p.t = cfg.code.t;
    if (cfg.mode == "target_p") {
        p.mode = StopMode::target_probability;
        p.p_target = cfg.p_target;
    } else if (cfg.mode == "max_p") {
        p.mode = StopMode::max_punctures;
        p.p_max = cfg.p_max;
    }
    return p;
}

PunctureOptions options_of(const RunConfig& cfg) {
    PunctureOptions o;
    o.leaders = cfg.leaders == "canonical" ? LeaderSet::canonical : LeaderSet::all_minimum;
    o.first_positions = cfg.first_positions;
    o.limits = limits_of(cfg);
    return o;
}

int cmd_embed(const RunConfig& cfg) {
    const auto built = build_scheme(cfg.code, cfg.scheme, policy_of(cfg), options_of(cfg));
    const auto& scheme = *built.scheme;
    const auto cover = bytes_to_bits(read_file(cfg.in_path));
    const auto message = bytes_to_bits(read_file(cfg.msg_path));
    const auto res = embed_stream(scheme, cover, message);
    write_file(cfg.out_path, serialize(res.file));

    int max_changes = 0;
    std::uint64_t total_changes = 0;
    for (const auto& b : res.blocks) {
        max_changes = std::max(max_changes, b.changes);
        total_changes += static_cast<std::uint64_t>(b.changes);
    }
    std::cout << fmt::format("{} scheme [n={}, r={}]: {} message bits in {} blocks, {} changes (max {} per block)\n",
                             scheme_kind_name(scheme.kind()), scheme.length(), scheme.message_length(),
                             message.size(), res.blocks.size(), total_changes, max_changes);
    if (!res.ok()) {
        std::cout << fmt::format("{} of {} blocks failed to embed:\n", res.failed, res.blocks.size());
        for (const auto& b : res.blocks)
            if (!b.ok) std::cout << fmt::format("  block {} (cover bits {}..{})\n", b.index, b.index * scheme.length(),
                                                (b.index + 1) * scheme.length() - 1);
        return exit_embedding;
    }
    return exit_ok;
}

int cmd_extract(const RunConfig& cfg) {
    const auto built = build_scheme(cfg.code, cfg.scheme, policy_of(cfg), options_of(cfg));
    const auto file = parse_bitstream(read_file(cfg.in_path));
    const auto msg = extract_stream(*built.scheme, file);
    write_file(cfg.out_path, bits_to_bytes(msg));
    std::cout << fmt::format("extracted {} message bits from {} blocks\n", msg.size(), file.block_count);
    return exit_ok;
}

int run(const std::string& command, const RunConfig& cfg) {
    if (command == "info") {
        const auto built = build_code(cfg.code);
        std::optional<SampledProbability> sampled;
        if (cfg.trials > 0) sampled = sample_embedding_probability(built, cfg.trials, cfg.seed);
        emit(cfg, render_info(built, limits_of(cfg), cfg.format, sampled));
    } else if (command == "table1") {
        emit(cfg, render_table1(table1_rows(cfg.m_from, cfg.m_to), cfg.format));
    } else if (command == "table2") {
        emit(cfg, render_table2(table2_rows(cfg.m_from, cfg.m_to, limits_of(cfg)), cfg.format));
    } else if (command == "tables34") {
        const std::vector<int> ts = cfg.code.t == 0 ? std::vector<int>{2, 3} : std::vector<int>{cfg.code.t};
        emit(cfg, render_tables34(tables34_rows(cfg.m_from, cfg.m_to, ts, options_of(cfg)), cfg.format));
    } else if (command == "puncture") {
        auto built = build_code(cfg.code);
        StopPolicy policy = policy_of(cfg);
        policy.t = built.t;
        const auto res = find_puncture_set(built.code, policy, options_of(cfg));
        emit(cfg, render_puncture(built.spec, policy, res, cfg.format));
        if (policy.mode == StopMode::reach_t && !res.converged) return exit_verification;
    } else if (command == "bound") {
        const double b = entropy_bound(cfg.q, cfg.rate);
        if (cfg.format == OutputFormat::json)
            emit(cfg, fmt::format("{{\"q\": {}, \"a\": {}, \"bound\": {}}}\n", cfg.q, cfg.rate, b));
        else if (cfg.format == OutputFormat::csv)
            emit(cfg, fmt::format("q,a,bound\n{},{},{:.6f}\n", cfg.q, cfg.rate, b));
        else
            emit(cfg, fmt::format("a / H_{}^-1(a) at a = {}: {:.6f}\n", cfg.q, cfg.rate, b));
    } else if (command == "verify") {
        const auto checks = run_verify(cfg.suite, limits_of(cfg));
        emit(cfg, render_verify(checks, cfg.format));
        for (const auto& c : checks)
            if (!c.ok) return exit_verification;
    } else if (command == "embed") {
        return cmd_embed(cfg);
    } else if (command == "extract") {
        return cmd_extract(cfg);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix-embedding steganography with punctured codes"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.cap_bits = TableLimits::from_environment().cap_bits;

    const std::map<std::string, Family> families{{"bch", Family::bch}, {"hamming", Family::hamming}};
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    const std::map<std::string, SchemeChoice> schemes{
        {"punctured", SchemeChoice::punctured}, {"bounded", SchemeChoice::bounded}, {"table", SchemeChoice::table}};

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--cap", cfg.cap_bits, "log2 of the largest coset table (env PSTEGO_CAP_BITS)")
            ->check(CLI::Range(10, 40));
        sub->add_option("--out", cfg.out_path, "Output path (default stdout)");
    };
    const auto add_code = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.code.family, "Code family")->transform(CLI::CheckedTransformer(families));
        sub->add_option("--m", cfg.code.m, "Field degree / Hamming redundancy")->check(CLI::Range(2, 16));
        sub->add_option("--t", cfg.code.t, "Designed error-correcting capability")->check(CLI::Range(1, 1000));
    };
    const auto add_policy = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "Stop policy")->check(CLI::IsMember({"reach_t", "target_p", "max_p"}));
        sub->add_option("--p-target", cfg.p_target, "Target embedding probability")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--p-max", cfg.p_max, "Maximum number of punctures")->check(CLI::NonNegativeNumber);
        sub->add_flag("--puncture-first-positions", cfg.first_positions,
                      "Puncture the leading information positions instead of searching");
        sub->add_option("--leaders", cfg.leaders, "Vectors counted by the search")
            ->check(CLI::IsMember({"all", "canonical"}));
    };
    std::map<std::string, std::pair<int, int>> ranges{{"table1", {5, 10}}, {"table2", {4, 10}}, {"tables34", {4, 6}}};
    const auto add_range = [&](CLI::App* sub) {
        auto& range = ranges.at(sub->get_name());
        sub->add_option("--from", range.first, "First m")->capture_default_str()->check(CLI::Range(3, 16));
        sub->add_option("--to", range.second, "Last m")->capture_default_str()->check(CLI::Range(3, 16));
    };

    auto* info = app.add_subcommand("info", "Describe a code");
    add_code(info);
    add_common(info);
    info->add_option("--trials", cfg.trials, "Sample this many (cover, message) pairs through the decoder");
    info->add_option("--seed", cfg.seed, "Random seed for --trials")->capture_default_str();

    auto* t1 = app.add_subcommand("table1", "Syndrome-table sizes for BCH_m(3) in megabits");
    add_common(t1);
    auto* t2 = app.add_subcommand("table2", "Efficiency of bounded BCH_m(3) schemes");
    add_common(t2);
    auto* t34 = app.add_subcommand("tables34", "BCH_m(t) schemes next to their punctured codes");
    add_common(t34);
    t34->add_option("--t", cfg.code.t, "Only this t (default both 2 and 3)")->check(CLI::Range(2, 3));
    t34->add_flag("--puncture-first-positions", cfg.first_positions, "Puncture leading information positions");

    auto* punct = app.add_subcommand("puncture", "Search a puncture set for a code");
    add_code(punct);
    add_policy(punct);
    add_common(punct);

    auto* embed = app.add_subcommand("embed", "Embed a message file into a cover file");
    auto* extract = app.add_subcommand("extract", "Extract the message from a stego file");
    for (auto* sub : {embed, extract}) {
        add_code(sub);
        add_policy(sub);
        add_common(sub);
        sub->add_option("--scheme", cfg.scheme, "Scheme realization")->transform(CLI::CheckedTransformer(schemes));
        sub->add_option("--in", cfg.in_path, sub == embed ? "Cover file" : "Stego file")->required();
        sub->get_option("--out")->required();
    }
    embed->add_option("--msg", cfg.msg_path, "Message file")->required();

    auto* bound = app.add_subcommand("bound", "Upper bound a / H_q^-1(a) on embedding efficiency");
    bound->add_option("--a", cfg.rate, "Relative payload in (0, 1]")->required();
    bound->add_option("--q", cfg.q, "Alphabet size")->check(CLI::Range(2, 1 << 16));
    add_common(bound);

    auto* verify = app.add_subcommand("verify", "Run built-in self checks");
    verify->add_option("--suite", cfg.suite, "Suite name or all");
    add_common(verify);

    add_range(t1);
    add_range(t2);
    add_range(t34);

    cfg.code.t = 3;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    if (const auto it = ranges.find(command); it != ranges.end()) std::tie(cfg.m_from, cfg.m_to) = it->second;
    if (command == "tables34" && chosen->count("--t") == 0) cfg.code.t = 0;
    if (cfg.m_from > cfg.m_to) {
        std::cerr << "--from must not exceed --to\n";
        return exit_usage;
    }

    try {
        return run(command, cfg);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return exit_embedding;
    } catch (const format_error& e) {
        std::cerr << "malformed stream: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
