#include "disparity/rs_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "disparity/errors.hpp"

namespace disparity {

RSPoint rs_statistic(std::span<const double> series, int tau) {
    if (tau < 2 || static_cast<std::size_t>(tau) > series.size()) {
        throw TauOutOfRange(tau, series.size());
    }
    const std::size_t n = static_cast<std::size_t>(tau);

    double mean = 0.0;
    for (std::size_t t = 0; t < n; ++t) mean += series[t];
    mean /= static_cast<double>(n);

    double cumulative = 0.0;
    double max_dev = 0.0;
    double min_dev = 0.0;
    double var = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double centered = series[t] - mean;
        cumulative += centered;
        max_dev = std::max(max_dev, cumulative);
        min_dev = std::min(min_dev, cumulative);
        var += centered * centered;
    }
    const double s = std::sqrt(var / static_cast<double>(n));
    if (s == 0.0) {
        throw ZeroVariance(tau);
    }
    return {tau, (max_dev - min_dev) / s};
}

HurstResult hurst(std::span<const double> series, int tau_min) {
    if (tau_min < 2) {
        throw std::invalid_argument("tau_min must be at least 2");
    }
    HurstResult result;
    for (int tau = tau_min; tau <= static_cast<int>(series.size()); ++tau) {
        try {
            result.points.push_back(rs_statistic(series, tau));
        } catch (const ZeroVariance&) {
            // constant prefix: window excluded
        }
    }
    if (result.points.size() < 3) {
        throw InsufficientWindows(result.points.size());
    }

    const double n = static_cast<double>(result.points.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& p : result.points) {
        sx += std::log(p.tau / 2.0);
        sy += std::log(p.rs);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : result.points) {
        const double dx = std::log(p.tau / 2.0) - mx;
        const double dy = std::log(p.rs) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    result.hurst = sxy / sxx;
    result.intercept = my - result.hurst * mx;
    if (syy > 0.0) {
        result.r_squared = (sxy * sxy) / (sxx * syy);
    } else {
        result.r_squared = 1.0;  // all log(R/S) equal: the flat fit is exact
    }
    result.correlation = correlation_fn(result.hurst);
    return result;
}

double correlation_fn(double hurst) {
    return std::exp2(2.0 * hurst - 1.0) - 1.0;
}

std::string_view to_string(Persistence tag) {
    switch (tag) {
        case Persistence::Persistent: return "persistent";
        case Persistence::Antipersistent: return "antipersistent";
        case Persistence::Random: return "random";
    }
    return "unknown";
}

PersistenceClass classify(double hurst, double epsilon) {
    if (epsilon < 0.0 || epsilon >= 0.5) {
        throw std::invalid_argument("epsilon must lie in [0, 0.5)");
    }
    PersistenceClass cls;
    cls.threshold_band = epsilon;
    if (hurst > 0.5 + epsilon) {
        cls.tag = Persistence::Persistent;
    } else if (hurst < 0.5 - epsilon) {
        cls.tag = Persistence::Antipersistent;
    } else {
        cls.tag = Persistence::Random;
    }
    return cls;
}

std::vector<SubperiodHurst> subperiod_hurst(std::span<const std::pair<int, double>> series,
                                            std::span<const YearRange> periods, double epsilon,
                                            int tau_min) {
    std::vector<SubperiodHurst> table;
    table.reserve(periods.size());
    for (const YearRange& period : periods) {
        SubperiodHurst entry;
        entry.period = period;

        std::vector<double> values;
        for (const auto& [year, value] : series) {
            if (year >= period.start_year && year <= period.end_year) {
                values.push_back(value);
            }
        }
        entry.observations = values.size();
        if (values.empty()) {
            entry.note = PeriodOutsideSeries(period.start_year, period.end_year).what();
            table.push_back(std::move(entry));
            continue;
        }
        if (values.size() < 12) {
            entry.note = "short sample (" + std::to_string(values.size()) + " observations)";
        }
        try {
            entry.result = hurst(values, tau_min);
            entry.persistence = classify(entry.result->hurst, epsilon);
        } catch (const ComputeError& e) {
            entry.result.reset();
            entry.note = e.what();
        }
        table.push_back(std::move(entry));
    }
    return table;
}

std::vector<YearRange> default_periods() {
    return {{1952, 1965}, {1966, 1978}, {1979, 1990}, {1991, 2000}, {1952, 2000}};
}

}  // namespace disparity
