#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "disparity/errors.hpp"
#include "disparity/ratios.hpp"
#include "oracles.hpp"

using namespace disparity;

namespace {

RegionalPanel three_region_year() {
    std::vector<ProvinceObservation> rows;
    rows.push_back({"a", "A", SupraRegion::Coastal, 1952, 20.0, 10.0, 1.0});   // pc 2
    rows.push_back({"b", "B", SupraRegion::Middle, 1952, 80.0, 10.0, 1.0});    // pc 8
    rows.push_back({"c", "C", SupraRegion::Western, 1952, 40.0, 10.0, 1.0});   // pc 4
    return RegionalPanel(std::move(rows), PriceBasis::nominal());
}

}  // namespace

TEST_CASE("a region over itself is constantly one") {
    std::mt19937_64 rng(31);
    const auto panel = oracles::random_panel(rng, 4, 6);
    const auto id = panel.region_ids().front();
    const auto series = ratio_series(panel, RatioOperand::region(id), RatioOperand::region(id));
    REQUIRE(series.values.size() == 6);
    for (const auto& [year, ratio] : series.values) {
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("reciprocity: (A/B)(B/A) = 1") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 100; ++round) {
        const auto panel = oracles::random_panel(rng, 2 + round % 6, 3);
        const auto ids = panel.region_ids();
        const auto ab = ratio_series(panel, RatioOperand::region(ids[0]),
                                     RatioOperand::region(ids[1]));
        const auto ba = ratio_series(panel, RatioOperand::region(ids[1]),
                                     RatioOperand::region(ids[0]));
        REQUIRE(ab.values.size() == ba.values.size());
        for (std::size_t i = 0; i < ab.values.size(); ++i) {
            CHECK(ab.values[i].second * ba.values[i].second ==
                  doctest::Approx(1.0).scale(1).epsilon(1e-12));
        }
    }
}

TEST_CASE("national ratios compose: (A/N)/(B/N) = A/B") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 50; ++round) {
        const auto panel = oracles::random_panel(rng, 3 + round % 5, 4);
        const auto ids = panel.region_ids();
        const auto an = ratio_series(panel, RatioOperand::region(ids[0]), RatioOperand::national());
        const auto bn = ratio_series(panel, RatioOperand::region(ids[1]), RatioOperand::national());
        const auto ab = ratio_series(panel, RatioOperand::region(ids[0]),
                                     RatioOperand::region(ids[1]));
        REQUIRE(an.values.size() == ab.values.size());
        for (std::size_t i = 0; i < ab.values.size(); ++i) {
            CHECK(an.values[i].second / bn.values[i].second ==
                  doctest::Approx(ab.values[i].second).scale(1).epsilon(1e-12));
        }
    }
}

TEST_CASE("years lacking an operand are skipped; none in common is an error") {
    std::vector<ProvinceObservation> rows;
    rows.push_back({"a", "A", SupraRegion::Coastal, 1952, 10.0, 5.0, 1.0});
    rows.push_back({"a", "A", SupraRegion::Coastal, 1953, 11.0, 5.0, 1.1});
    rows.push_back({"b", "B", SupraRegion::Middle, 1953, 6.0, 3.0, 1.0});
    rows.push_back({"b", "B", SupraRegion::Middle, 1954, 7.0, 3.0, 1.16});
    rows.push_back({"c", "C", SupraRegion::Western, 1960, 9.0, 4.0, 1.0});
    const RegionalPanel panel(std::move(rows), PriceBasis::nominal());

    const auto series = ratio_series(panel, RatioOperand::region("a"), RatioOperand::region("b"));
    REQUIRE(series.values.size() == 1);
    CHECK(series.values.front().first == 1953);

    CHECK_THROWS_AS(ratio_series(panel, RatioOperand::region("a"), RatioOperand::region("c")),
                    NoCommonYears);
}

TEST_CASE("extreme pair on per-capita (2, 8, 4)") {
    const auto panel = three_region_year();
    const auto pair = extreme_pair(panel, 1952);
    CHECK(pair.max_region == "b");
    CHECK(pair.min_region == "a");
    CHECK(pair.ratio == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("extreme pair: ties break toward the smaller region id") {
    std::vector<ProvinceObservation> rows;
    rows.push_back({"b", "B", SupraRegion::Coastal, 1952, 20.0, 10.0, 1.0});
    rows.push_back({"a", "A", SupraRegion::Middle, 1952, 40.0, 20.0, 1.0});
    rows.push_back({"c", "C", SupraRegion::Western, 1952, 10.0, 5.0, 1.0});
    const RegionalPanel panel(std::move(rows), PriceBasis::nominal());
    const auto pair = extreme_pair(panel, 1952);
    CHECK(pair.max_region == "a");
    CHECK(pair.min_region == "a");
    CHECK(pair.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("extreme pair requires at least two regions") {
    std::vector<ProvinceObservation> rows;
    rows.push_back({"a", "A", SupraRegion::Coastal, 1952, 20.0, 10.0, 1.0});
    const RegionalPanel panel(std::move(rows), PriceBasis::nominal());
    CHECK_THROWS_AS(extreme_pair(panel, 1952), TooFewRegions);
}

TEST_CASE("extreme pair ratio is at least one") {
    std::mt19937_64 rng(34);
    for (int round = 0; round < 100; ++round) {
        const auto panel = oracles::random_panel(rng, 2 + round % 10, 2);
        const auto pair = extreme_pair(panel, 1952);
        CHECK(pair.ratio >= 1.0);
    }
}
