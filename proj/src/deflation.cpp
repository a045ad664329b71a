#include "disparity/deflation.hpp"

#include "disparity/errors.hpp"

namespace disparity {

RegionalPanel deflate(const RegionalPanel& panel, int base_year) {
    if (!panel.price_basis().is_nominal()) {
        throw AlreadyDeflated();
    }
    const auto [min_year, max_year] = panel.year_range();
    if (base_year < min_year || base_year > max_year) {
        throw BaseYearOutOfRange(base_year, min_year, max_year);
    }

    // Observations are sorted by (region_id, year), so each region's first
    // row carries its first-year level.
    std::vector<ProvinceObservation> deflated = panel.observations();
    std::string current_region;
    double first_year_gdp = 0.0;
    for (auto& obs : deflated) {
        if (!obs.growth_index) {
            throw MissingIndex(obs.region_id, obs.year);
        }
        if (obs.region_id != current_region) {
            current_region = obs.region_id;
            first_year_gdp = obs.gdp;
        }
        obs.gdp = first_year_gdp * *obs.growth_index;
    }
    return RegionalPanel(std::move(deflated), PriceBasis::constant_price(base_year));
}

PerCapita per_capita(const RegionalPanel& panel) {
    PerCapita result;
    std::map<int, double> gdp_sum;
    std::map<int, double> pop_sum;
    for (const auto& obs : panel.observations()) {
        result.regional[obs.region_id][obs.year] = obs.gdp / obs.population;
        gdp_sum[obs.year] += obs.gdp;
        pop_sum[obs.year] += obs.population;
    }
    for (const auto& [year, gdp] : gdp_sum) {
        result.national[year] = gdp / pop_sum[year];
    }
    return result;
}

}  // namespace disparity
