#pragma once

#include <map>
#include <optional>
#include <string>

#include "disparity/panel.hpp"

namespace disparity {

// Converts a nominal panel to constant prices: each region's series becomes
// its first-year level multiplied by the cumulative growth index, so the
// series shape is exactly the index. base_year is validated against the
// panel range and recorded in the result's price basis; it does not alter
// the values (re-basing with only a growth index available is a relabeling,
// so every share-based metric downstream is independent of the choice).
// Throws AlreadyDeflated, MissingIndex, BaseYearOutOfRange.
RegionalPanel deflate(const RegionalPanel& panel, int base_year);

// Per-capita GDP per (region, year) plus the national aggregate
// sum(gdp)/sum(population) over the regions present each year.
struct PerCapita {
    std::map<std::string, std::map<int, double>> regional;
    std::map<int, double> national;

    std::optional<double> regional_at(const std::string& region_id, int year) const {
        auto region = regional.find(region_id);
        if (region == regional.end()) return std::nullopt;
        auto value = region->second.find(year);
        if (value == region->second.end()) return std::nullopt;
        return value->second;
    }
    std::optional<double> national_at(int year) const {
        auto value = national.find(year);
        if (value == national.end()) return std::nullopt;
        return value->second;
    }
};

PerCapita per_capita(const RegionalPanel& panel);

}  // namespace disparity
