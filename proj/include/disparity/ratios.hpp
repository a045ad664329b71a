#pragma once

#include <string>
#include <vector>

#include "disparity/panel.hpp"

namespace disparity {

// Either one region's per-capita GDP or the national aggregate
// sum(gdp)/sum(population) over the regions present each year.
struct RatioOperand {
    bool is_national = false;
    std::string region_id;

    static RatioOperand national() { return {true, {}}; }
    static RatioOperand region(std::string id) { return {false, std::move(id)}; }
    std::string label() const { return is_national ? "national" : region_id; }
};

struct RatioSeries {
    RatioOperand numerator;
    RatioOperand denominator;
    std::vector<std::pair<int, double>> values;  // strictly increasing years
};

// ratio(year) = per_capita(numerator, year) / per_capita(denominator, year).
// Years lacking either operand are skipped; NoCommonYears if none remain.
RatioSeries ratio_series(const RegionalPanel& panel, const RatioOperand& numerator,
                         const RatioOperand& denominator);

struct ExtremePair {
    std::string max_region;
    std::string min_region;
    double ratio = 1.0;  // max per-capita over min per-capita, >= 1
};

// Regions with the highest and lowest per-capita GDP in one year; ties are
// broken toward the smaller region_id. Throws TooFewRegions, EmptyYear.
ExtremePair extreme_pair(const RegionalPanel& panel, int year);

}  // namespace disparity
