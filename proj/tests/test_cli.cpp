#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "disparity/deflation.hpp"
#include "disparity/errors.hpp"
#include "disparity/inequality.hpp"
#include "disparity/ratios.hpp"
#include "disparity/synthetic.hpp"

using namespace disparity;
using namespace disparity::cli;

namespace {

constexpr const char* kFixture = DISPARITY_TEST_DATA_DIR "/fixture_panel.csv";

RunConfig fixture_config() {
    RunConfig config;
    config.input_path = kFixture;
    config.base_year = 1970;
    return config;
}

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

template <typename F>
Run run(F&& body) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = body(out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream fields_in(line);
        std::string field;
        while (std::getline(fields_in, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

RegionalPanel fixture_panel_deflated() {
    std::ifstream in(kFixture);
    REQUIRE(in.good());
    return deflate(load_panel(in), 1970);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("metrics equals the library composition and is deterministic") {
    const auto config = fixture_config();
    const auto first = run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    const auto second = run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);  // byte-identical reruns

    const auto panel = fixture_panel_deflated();
    const auto gini_fit = disparity_series(panel, DisparityMetric::GiniCurveFit);
    const auto gini_ex = disparity_series(panel, DisparityMetric::GiniExact);
    const auto entropy = disparity_series(panel, DisparityMetric::Theil);

    const auto rows = parse_csv(first.out);
    REQUIRE(rows.size() == gini_fit.values.size() + 1);
    CHECK(rows[0] == std::vector<std::string>{"year", "gini_curvefit", "gini_exact", "theil",
                                              "beta", "fit_residual"});
    for (std::size_t i = 0; i < gini_fit.values.size(); ++i) {
        const auto& row = rows[i + 1];
        CHECK(row[0] == std::to_string(gini_fit.values[i].first));
        CHECK(std::stod(row[1]) == doctest::Approx(gini_fit.values[i].second).epsilon(1e-5));
        CHECK(std::stod(row[2]) == doctest::Approx(gini_ex.values[i].second).epsilon(1e-5));
        CHECK(std::stod(row[3]) == doctest::Approx(entropy.values[i].second).epsilon(1e-5));
    }
}

TEST_CASE("base10 run scales the theil column by 1/ln 10") {
    auto config = fixture_config();
    const auto natural = run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    config.log_base = LogBase::Base10;
    config.precision = 12;
    auto natural_hi = fixture_config();
    natural_hi.precision = 12;
    const auto nat =
        run([&](auto& out, auto& err) { return cmd_metrics(natural_hi, out, err); });
    const auto b10 = run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    REQUIRE(nat.exit_code == 0);
    REQUIRE(b10.exit_code == 0);
    const auto nat_rows = parse_csv(nat.out);
    const auto b10_rows = parse_csv(b10.out);
    REQUIRE(nat_rows.size() == b10_rows.size());
    for (std::size_t i = 1; i < nat_rows.size(); ++i) {
        CHECK(std::stod(b10_rows[i][3]) ==
              doctest::Approx(std::stod(nat_rows[i][3]) / std::log(10.0)).epsilon(1e-9));
        CHECK(nat_rows[i][1] == b10_rows[i][1]);  // gini columns unaffected
    }
    (void)natural;
}

TEST_CASE("csv and json carry identical values") {
    auto config = fixture_config();
    const auto csv = run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    config.format = OutputFormat::Json;
    const auto json_run =
        run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    REQUIRE(csv.exit_code == 0);
    REQUIRE(json_run.exit_code == 0);

    const auto rows = parse_csv(csv.out);
    const auto doc = nlohmann::json::parse(json_run.out);
    REQUIRE(doc.at("rows").size() == rows.size() - 1);
    for (std::size_t i = 0; i < doc.at("rows").size(); ++i) {
        const auto& obj = doc.at("rows")[i];
        CHECK(obj.at("year").get<long long>() == std::stoll(rows[i + 1][0]));
        CHECK(obj.at("gini_curvefit").get<double>() == std::stod(rows[i + 1][1]));
        CHECK(obj.at("theil").get<double>() == std::stod(rows[i + 1][3]));
    }
}

TEST_CASE("missing growth index fails unless the basis is constant or nominal is allowed") {
    const auto path = temp_file("disparity_noindex.csv");
    {
        std::ofstream out(path);
        out << "region_id,region_name,supra_region,year,gdp,population,growth_index\n";
        out << "a,A,coastal,1952,100,50,\n";
        out << "b,B,middle,1952,80,40,\n";
    }
    RunConfig config;
    config.input_path = path.string();
    config.base_year = 1952;

    const auto failed = run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    CHECK(failed.exit_code == 1);
    CHECK(failed.err.find("growth_index") != std::string::npos);

    config.price_basis = PriceBasis::Kind::ConstantPrice;
    const auto constant =
        run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    CHECK(constant.exit_code == 0);

    config.price_basis = PriceBasis::Kind::Nominal;
    config.allow_nominal = true;
    const auto nominal =
        run([&](auto& out, auto& err) { return cmd_metrics(config, out, err); });
    CHECK(nominal.exit_code == 0);
    CHECK(nominal.out == constant.out);  // same numbers either way

    std::filesystem::remove(path);
}

TEST_CASE("ratios: self ratio, reciprocity, unknown region") {
    const auto config = fixture_config();
    const auto self = run(
        [&](auto& out, auto& err) { return cmd_ratios(config, "guizhou", "guizhou", out, err); });
    REQUIRE(self.exit_code == 0);
    for (auto rows = parse_csv(self.out); const auto& row : rows) {
        if (row[0] == "year") continue;
        CHECK(std::stod(row[1]) == doctest::Approx(1.0).epsilon(1e-12));
    }

    const auto ab = run(
        [&](auto& out, auto& err) { return cmd_ratios(config, "shanghai", "guizhou", out, err); });
    const auto ba = run(
        [&](auto& out, auto& err) { return cmd_ratios(config, "guizhou", "shanghai", out, err); });
    const auto ab_rows = parse_csv(ab.out);
    const auto ba_rows = parse_csv(ba.out);
    REQUIRE(ab_rows.size() == ba_rows.size());
    for (std::size_t i = 1; i < ab_rows.size(); ++i) {
        CHECK(std::stod(ab_rows[i][1]) * std::stod(ba_rows[i][1]) ==
              doctest::Approx(1.0).epsilon(1e-5));
    }

    const auto unknown = run(
        [&](auto& out, auto& err) { return cmd_ratios(config, "atlantis", "national", out, err); });
    CHECK(unknown.exit_code == 1);

    // region names resolve case-insensitively
    const auto by_name = run(
        [&](auto& out, auto& err) { return cmd_ratios(config, "Shanghai", "National", out, err); });
    CHECK(by_name.exit_code == 0);
}

TEST_CASE("hurst: per-period errors leave other rows intact") {
    auto config = fixture_config();
    config.periods = {{1952, 1954}, {1952, 1975}};
    const auto result = run([&](auto& out, auto& err) {
        return cmd_hurst(config, HurstOptions{}, out, err);
    });
    REQUIRE(result.exit_code == 0);
    const auto rows = parse_csv(result.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][0] == "1952-1954");
    CHECK(rows[1][6] == "error");
    CHECK(rows[2][0] == "1952-1975");
    CHECK(rows[2][6] == "persistent");
}

TEST_CASE("hurst on a raw fGn series file classifies H = 0.7 as persistent") {
    const auto path = temp_file("disparity_fgn.txt");
    {
        FgnOptions options;
        options.hurst_true = 0.7;
        options.length = 1024;
        options.seed = 99;
        std::ofstream out(path);
        std::ostringstream err;
        REQUIRE(cmd_gen_fgn(options, out, err) == 0);
    }
    RunConfig config;  // no panel input needed
    HurstOptions options;
    options.series_path = path.string();
    const auto result =
        run([&](auto& out, auto& err) { return cmd_hurst(config, options, out, err); });
    REQUIRE(result.exit_code == 0);
    const auto rows = parse_csv(result.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][6] == "persistent");
    std::filesystem::remove(path);
}

TEST_CASE("gen-fgn is deterministic and matches the library") {
    FgnOptions options;
    options.hurst_true = 0.6;
    options.length = 64;
    options.seed = 4242;
    const auto first = run([&](auto& out, auto& err) { return cmd_gen_fgn(options, out, err); });
    const auto second = run([&](auto& out, auto& err) { return cmd_gen_fgn(options, out, err); });
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    const auto series = generate_fgn({0.6, 64, 4242});
    const auto rows = parse_csv(first.out);
    REQUIRE(rows.size() == series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        CHECK(std::stod(rows[i][0]) == series[i]);  // %.17g round-trips exactly
    }
}

TEST_CASE("validate compares ratio and hurst results against a tables file") {
    // build a small panel and a tables file that matches it exactly, then
    // perturb one expected value and watch the mismatch being reported
    const auto panel_path = temp_file("disparity_validate_panel.csv");
    const auto tables_path = temp_file("disparity_validate_tables.json");

    std::vector<ProvinceObservation> rows;
    for (int r = 0; r < 5; ++r) {
        const std::string id = r == 0 ? "shanghai" : (r == 1 ? "guizhou" : "p" + std::to_string(r));
        const double base_gdp = 100.0 + 60.0 * r;
        const double base_pop = 50.0 + 20.0 * ((r * 7) % 5);
        double index = 1.0;
        for (int t = 0; t < 20; ++t) {
            ProvinceObservation obs;
            obs.region_id = id;
            obs.region_name = id;
            obs.supra_region = static_cast<SupraRegion>(r % 3);
            obs.year = 1952 + t;
            obs.gdp = base_gdp * index * std::pow(1.015, t);
            obs.population = base_pop * std::pow(1.01, t);
            obs.growth_index = index;
            rows.push_back(std::move(obs));
            index *= 1.0 + 0.01 * static_cast<double>((r + t) % 5);
        }
    }
    const RegionalPanel panel(std::move(rows), PriceBasis::nominal());
    {
        std::ofstream out(panel_path);
        write_panel(panel, out);
    }

    const auto deflated = deflate(panel, 1952);
    const auto sh = ratio_series(deflated, RatioOperand::region("shanghai"),
                                 RatioOperand::national());
    const auto gz = ratio_series(deflated, RatioOperand::region("guizhou"),
                                 RatioOperand::national());
    const auto theil_series = disparity_series(deflated, DisparityMetric::Theil);
    const std::vector<YearRange> periods = {{1952, 1971}};
    const auto hurst_entries = subperiod_hurst(theil_series.values, periods);
    REQUIRE(hurst_entries[0].result.has_value());

    nlohmann::ordered_json tables;
    tables["ratio_tolerance"] = 0.0005;
    tables["hurst_tolerance"] = 0.005;
    for (const auto& [year, value] : sh.values) {
        tables["shanghai_over_national"][std::to_string(year)] =
            std::round(value * 1000.0) / 1000.0;
    }
    for (const auto& [year, value] : gz.values) {
        tables["guizhou_over_national"][std::to_string(year)] =
            std::round(value * 1000.0) / 1000.0;
    }
    tables["theil_hurst"] = nlohmann::ordered_json::array();
    tables["theil_hurst"].push_back(
        {{"period", "1952-1971"},
         {"hurst", std::round(hurst_entries[0].result->hurst * 100.0) / 100.0},
         {"note", "synthetic fixture"}});
    {
        std::ofstream out(tables_path);
        out << tables.dump(2);
    }

    RunConfig config;
    config.input_path = panel_path.string();
    config.base_year = 1952;
    ValidateOptions options;
    options.tables_path = tables_path.string();

    SUBCASE("matching panel validates cleanly") {
        const auto result =
            run([&](auto& out, auto& err) { return cmd_validate(config, options, out, err); });
        CHECK(result.exit_code == 0);
        CHECK(result.err.find("0 mismatches") != std::string::npos);
        CHECK(result.err.find("synthetic fixture") != std::string::npos);
    }

    SUBCASE("a perturbed expectation is reported as a mismatch") {
        tables["shanghai_over_national"]["1953"] =
            tables["shanghai_over_national"]["1953"].get<double>() + 0.5;
        {
            std::ofstream out(tables_path);
            out << tables.dump(2);
        }
        const auto result =
            run([&](auto& out, auto& err) { return cmd_validate(config, options, out, err); });
        CHECK(result.exit_code == 2);
        CHECK(result.out.find("mismatch") != std::string::npos);
    }

    std::filesystem::remove(panel_path);
    std::filesystem::remove(tables_path);
}

TEST_CASE("the shipped reference tables parse and cover the full span") {
    std::ifstream in(DISPARITY_DATA_DIR "/paper_tables.json");
    REQUIRE(in.good());
    nlohmann::json tables;
    in >> tables;
    CHECK(tables.at("shanghai_over_national").size() == 49);
    CHECK(tables.at("guizhou_over_national").size() == 49);
    REQUIRE(tables.at("theil_hurst").size() == 5);
    // the discrepancy between the printed table and the body text is carried
    // as data, with both readings present
    const auto& entry = tables.at("theil_hurst")[2];
    CHECK(entry.at("hurst").get<double>() == doctest::Approx(0.722));
    CHECK(entry.at("alternate_hurst").get<double>() == doctest::Approx(0.772));
    CHECK(entry.contains("note"));
}

TEST_CASE("period parsing") {
    const auto periods = parse_periods("1952-1965,1966-1978");
    REQUIRE(periods.size() == 2);
    CHECK(periods[0].start_year == 1952);
    CHECK(periods[0].end_year == 1965);
    CHECK(periods[1].start_year == 1966);
    CHECK_THROWS_AS(parse_periods("1952"), InputError);
    CHECK_THROWS_AS(parse_periods("1990-1980"), InputError);
    CHECK_THROWS_AS(parse_periods("abc-def"), InputError);
}

TEST_CASE("number formatting follows the precision flag") {
    CHECK(format_number(4.30649, 6) == "4.30649");
    CHECK(format_number(4.30649, 3) == "4.31");
    CHECK(format_number(1952.0, 6) == "1952");
}
