#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace disparity {

struct RSPoint {
    int tau = 0;      // window length >= 2
    double rs = 0.0;  // rescaled range R(tau)/S(tau), finite and positive
};

// Classical (prefix-window) rescaled range over the first tau observations:
//   mean   <xi>_tau = (1/tau) sum xi(t)
//   X(t)   = sum_{u<=t} (xi(u) - <xi>_tau)
//   R(tau) = max_t X(t) - min_t X(t)      over t in [1, tau]
//   S(tau) = population standard deviation of the prefix (divisor tau)
// Throws TauOutOfRange (tau < 2 or tau > length) and ZeroVariance
// (constant prefix).
RSPoint rs_statistic(std::span<const double> series, int tau);

struct HurstResult {
    double hurst = 0.0;        // slope of log(R/S) on log(tau/2)
    double intercept = 0.0;    // log-space intercept
    double r_squared = 0.0;    // goodness of fit of the log-log regression
    std::vector<RSPoint> points;
    double correlation = 0.0;  // C = 2^(2H-1) - 1
};

// Ordinary least squares of log(R/S) on log(tau/2) over every integer
// tau in [tau_min, n]; windows with zero variance are dropped. Requires at
// least 3 usable windows (InsufficientWindows otherwise). The regressor is
// log(tau/2) exactly; using log(tau) instead would shift only the intercept,
// never the slope.
HurstResult hurst(std::span<const double> series, int tau_min = 2);

// Incidence function C = 2^(2H-1) - 1: zero at H = 0.5, increasing in H.
double correlation_fn(double hurst);

enum class Persistence { Persistent, Antipersistent, Random };

std::string_view to_string(Persistence tag);

struct PersistenceClass {
    Persistence tag = Persistence::Random;
    double threshold_band = 0.0;  // half-width around 0.5 classified Random
};

// Band rule: Persistent iff H > 0.5 + epsilon, Antipersistent iff
// H < 0.5 - epsilon, Random otherwise (boundaries inclusive in Random).
// epsilon must lie in [0, 0.5).
PersistenceClass classify(double hurst, double epsilon = 0.05);

struct YearRange {
    int start_year = 0;
    int end_year = 0;  // inclusive
};

struct SubperiodHurst {
    YearRange period;
    std::size_t observations = 0;
    std::optional<HurstResult> result;        // empty when the period failed
    std::optional<PersistenceClass> persistence;
    std::string note;                         // error marker or short-sample warning
};

// Applies hurst() to each year-sliced sub-series independently. A period
// that fails (outside the series, or too few usable windows) yields an
// error-marked entry; the other periods are still produced. Periods with
// fewer than 12 observations carry a short-sample warning.
std::vector<SubperiodHurst> subperiod_hurst(std::span<const std::pair<int, double>> series,
                                            std::span<const YearRange> periods,
                                            double epsilon = 0.05, int tau_min = 2);

// The four sub-periods plus the full span used throughout the analysis.
std::vector<YearRange> default_periods();

}  // namespace disparity
