#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pstego/report.hpp"

using namespace pstego;

TEST_CASE("syndrome table sizes") {
    const auto rows = table1_rows(5, 10);
    REQUIRE(rows.size() == 6);
    const double expect[] = {1.507, 21.234, 310.378, 4680.843, 72209.138, 1130650.141};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == (1 << (5 + i)) - 1);
        CHECK(rows[i].r == 3 * static_cast<int>(5 + i));
        CHECK(rows[i].size_mb == doctest::Approx(expect[i]).epsilon(5e-4 / expect[i]));
    }
    const auto csv = render_table1(rows, OutputFormat::csv);
    CHECK(csv.rfind("m,n,r,size_mb\n5,31,15,1.507\n", 0) == 0);
}

TEST_CASE("parameter CSV keeps the canonical leading columns") {
    CHECK(params_csv_header() == "m,n,r,a,T,T_avg,R,R_avg,e,e_avg,p_S,e_rel,e_avg_rel");
    const auto rows = table2_rows(4, 4, TableLimits{});
    const auto csv = render_table2(rows, OutputFormat::csv);
    CHECK(csv.rfind(params_csv_header(), 0) == 0);
    std::istringstream in(csv);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(row.rfind("4,15,10,0.667,5,", 0) == 0);
}

TEST_CASE("JSON output is stable") {
    const auto rows = table2_rows(4, 5, TableLimits{});
    const auto a = render_table2(rows, OutputFormat::json);
    const auto b = render_table2(table2_rows(4, 5, TableLimits{}), OutputFormat::json);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["m"] == 4);
    CHECK(j[0]["params"]["e"].get<double>() == doctest::Approx(2.0));
    CHECK(j[1]["params"]["e"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("puncture report carries the trace") {
    const CodeSpec spec{Family::bch, 4, 3};
    const StopPolicy policy{StopMode::reach_t, 3};
    const auto built = build_scheme(spec, SchemeChoice::punctured, policy, PunctureOptions{});
    REQUIRE(built.puncture.has_value());
    REQUIRE(built.scheme.has_value());
    CHECK(built.scheme->length() == 12);
    const auto j = nlohmann::json::parse(render_puncture(spec, policy, *built.puncture, OutputFormat::json));
    CHECK(j["converged"] == true);
    CHECK(j["positions"].size() == 3);
    CHECK(j["punctured"]["n"] == 12);
    REQUIRE(j["trace"].is_array());
    CHECK(j["trace"].size() == 3);
    for (const auto& step : j["trace"]) {
        CHECK(step.contains("position"));
        CHECK(step.contains("rho_after"));
    }
}

TEST_CASE("code labels and Hamming builds") {
    CHECK(code_label(CodeSpec{Family::bch, 5, 2}) == "BCH_5(2)");
    const auto ham = build_code(CodeSpec{Family::hamming, 3, 0});
    CHECK(ham.code->length() == 7);
    CHECK(ham.t == 1);
    CHECK(ham.decoder->minimum_distance());
}

TEST_CASE("verify suites") {
    const auto suites = verify_suites();
    CHECK(std::find(suites.begin(), suites.end(), "support") != suites.end());
    const auto checks = run_verify("support", TableLimits{});
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) CHECK_MESSAGE(c.ok, c.name);
    CHECK_THROWS(run_verify("nope", TableLimits{}));
}
