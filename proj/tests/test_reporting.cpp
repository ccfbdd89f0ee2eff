#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "qutritlab/analyze.hpp"
#include "qutritlab/cloner.hpp"
#include "qutritlab/paper_check.hpp"
#include "qutritlab/protocols.hpp"
#include "qutritlab/sweep.hpp"

using namespace qutritlab;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("reporting");

TEST_CASE("sweep grid arithmetic") {
    const auto records = sweep(0.05, 0.45, 5, false);
    REQUIRE(records.size() == 5);
    CHECK(records.front().mu == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(records.back().mu == doctest::Approx(0.45).epsilon(1e-15));
    for (size_t i = 1; i < records.size(); ++i)
        CHECK(records[i].mu - records[i - 1].mu == doctest::Approx(0.1).epsilon(1e-12));
    for (const auto& r : records) {
        CHECK(r.fid_raw == doctest::Approx((3.0 * r.fef_raw + 1.0) / 4.0).epsilon(1e-12));
        CHECK(r.entropy_gap_raw < 0.0);
        CHECK(r.min_pt_eig < 0.0);
        CHECK(r.distillable);
        CHECK_FALSE(r.fef_filtered.has_value());
    }
}

TEST_CASE("sweep range validation") {
    CHECK_THROWS_AS(sweep(0.0, 0.4, 5, false), DomainError);
    CHECK_THROWS_AS(sweep(0.3, 0.2, 5, false), DomainError);
    CHECK_THROWS_AS(sweep(0.1, 0.6, 5, false), DomainError);
    CHECK_THROWS_AS(sweep(0.1, 0.4, 1, false), DomainError);
}

TEST_CASE("filtered columns appear exactly on the filter domain") {
    const auto records = sweep(0.42, 0.5, 9, true);
    for (const auto& r : records) {
        const bool in_range = r.mu > nonoptimal_range_low();
        CHECK(r.fef_filtered.has_value() == in_range);
        CHECK(r.fid_filtered.has_value() == in_range);
        CHECK(r.entropy_gap_filtered.has_value() == in_range);
        CHECK(r.capacity_filtered.has_value() == in_range);
        if (in_range) {
            CHECK(*r.fid_filtered > 0.5);
            CHECK(*r.fid_filtered ==
                  doctest::Approx((3.0 * *r.fef_filtered + 1.0) / 4.0).epsilon(1e-12));
            CHECK(*r.capacity_filtered ==
                  doctest::Approx(log2_three() + *r.entropy_gap_filtered).epsilon(1e-12));
        }
    }
    // the optimal point also carries filtered values
    const SweepRecord opt = compute_sweep_record(optimal_mu(), true);
    CHECK(opt.fef_filtered.has_value());
    CHECK(*opt.fef_filtered == doctest::Approx(0.38779014).epsilon(1e-6));
}

TEST_CASE("csv rendering") {
    const auto records = sweep(0.05, 0.45, 5, false);
    const std::string csv = sweep_to_csv(records);
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() == 7);  // header + 5 rows + trailing empty
    CHECK(lines[0] == kSweepCsvHeader);
    CHECK(lines[6].empty());
    for (int i = 1; i <= 5; ++i) {
        const auto fields = split(lines[i], ',');
        REQUIRE(fields.size() == 13);
        for (int f = 9; f < 13; ++f) CHECK(fields[f].empty());
        CHECK(fields[8] == "true");
        // numbers parse back and satisfy the fidelity relation
        const double fef = std::stod(fields[5]), fid = std::stod(fields[6]);
        CHECK(fid == doctest::Approx((3.0 * fef + 1.0) / 4.0).epsilon(1e-9));
        CHECK(fields[1].find(',') == std::string::npos);
    }
    const std::string csv_filtered = sweep_to_csv(sweep(0.44, 0.5, 3, true));
    const auto flines = split(csv_filtered, '\n');
    for (int i = 1; i <= 3; ++i) {
        const auto fields = split(flines[i], ',');
        REQUIRE(fields.size() == 13);
        for (int f = 9; f < 13; ++f) CHECK_FALSE(fields[f].empty());
    }
}

TEST_CASE("number formatting is plain and stable") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 6.0) == "0.166666666667");
    CHECK(format_number(1e-9) == "1e-09");
}

TEST_CASE("sweeps and checks are deterministic") {
    const std::string a = sweep_to_csv(sweep(0.05, 0.5, 40, true));
    const std::string b = sweep_to_csv(sweep(0.05, 0.5, 40, true));
    CHECK(a == b);

    const auto rows1 = paper_check_rows();
    const auto rows2 = paper_check_rows();
    CHECK(paper_check_table(rows1) == paper_check_table(rows2));
    CHECK(paper_check_json(rows1) == paper_check_json(rows2));
}

TEST_CASE("svg rendering") {
    const auto records = sweep(0.05, 0.5, 20, true);
    const std::string svg = sweep_to_svg(records);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("fef_filtered") != std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
    CHECK(svg == sweep_to_svg(records));
}

TEST_CASE("paper check: reproduction rows pass, advisories carry verdicts") {
    const auto rows = paper_check_rows();
    CHECK(all_non_advisory_pass(rows));
    int advisories = 0;
    bool has_mod_rule = false, has_stray_d = false, has_radicand = false;
    for (const auto& r : rows) {
        if (r.status != RowStatus::advisory) {
            CHECK(r.status == RowStatus::pass);
            continue;
        }
        ++advisories;
        CHECK_FALSE(r.name.empty());
        if (r.name.find("(mod2)") != std::string::npos) has_mod_rule = true;
        if (r.name.find("stray 'd'") != std::string::npos) has_stray_d = true;
        if (r.name.find("radicand") != std::string::npos) has_radicand = true;
    }
    CHECK(advisories >= 3);
    CHECK(has_mod_rule);
    CHECK(has_stray_d);
    CHECK(has_radicand);
}

TEST_CASE("paper check json shape") {
    const auto rows = paper_check_rows();
    const auto parsed = nlohmann::json::parse(paper_check_json(rows));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == rows.size());
    for (const auto& obj : parsed) {
        for (const char* key : {"name", "expected", "computed", "tolerance", "source", "status"})
            CHECK(obj.contains(key));
        const std::string status = obj["status"];
        CHECK((status == "PASS" || status == "ADVISORY"));
    }
}

TEST_CASE("analyze reports") {
    const std::string opt = analyze_report(optimal_mu(), false);
    CHECK(opt.find("optimal (mu^2 = 1/8)") != std::string::npos);
    CHECK(opt.find("0.166666666667") != std::string::npos);
    CHECK(opt.find("NPT: entangled") != std::string::npos);

    const std::string low = analyze_report(0.2, true);
    CHECK(low.find("unavailable") != std::string::npos);

    const std::string mid = analyze_report(0.45, true);
    CHECK(mid.find("-> useful for teleportation") != std::string::npos);
    CHECK(mid.find("not useful for dense coding") != std::string::npos);

    const std::string high = analyze_report(0.5, true);
    CHECK(high.find("-> useful for dense coding") != std::string::npos);

    CHECK_THROWS_AS(analyze_report(0.6, false), DomainError);
    CHECK(analyze_report(0.45, true) == analyze_report(0.45, true));
}

TEST_SUITE_END();
