#include "disparity/ratios.hpp"

#include "disparity/deflation.hpp"
#include "disparity/errors.hpp"

namespace disparity {

RatioSeries ratio_series(const RegionalPanel& panel, const RatioOperand& numerator,
                         const RatioOperand& denominator) {
    const PerCapita pc = per_capita(panel);
    const auto value_of = [&pc](const RatioOperand& op, int year) {
        return op.is_national ? pc.national_at(year) : pc.regional_at(op.region_id, year);
    };

    RatioSeries series;
    series.numerator = numerator;
    series.denominator = denominator;
    for (int year : panel.years()) {
        const auto num = value_of(numerator, year);
        const auto den = value_of(denominator, year);
        if (num && den) {
            series.values.emplace_back(year, *num / *den);
        }
    }
    if (series.values.empty()) {
        throw NoCommonYears();
    }
    return series;
}

ExtremePair extreme_pair(const RegionalPanel& panel, int year) {
    const auto slice = panel.year_slice(year);
    if (slice.size() < 2) {
        throw TooFewRegions(slice.size());
    }
    // slice is ordered by region_id, so strict comparisons keep the
    // smallest id among ties.
    const YearObservation* max_obs = &slice.front();
    const YearObservation* min_obs = &slice.front();
    for (const auto& obs : slice) {
        if (obs.per_capita() > max_obs->per_capita()) max_obs = &obs;
        if (obs.per_capita() < min_obs->per_capita()) min_obs = &obs;
    }
    return {max_obs->region_id, min_obs->region_id, max_obs->per_capita() / min_obs->per_capita()};
}

}  // namespace disparity
