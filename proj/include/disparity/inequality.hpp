#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "disparity/panel.hpp"

namespace disparity {

enum class LogBase { Natural, Base10 };

struct LorenzPoint {
    double pop_share = 0.0;  // accumulated population share, in (0, 1]
    double gdp_share = 0.0;  // accumulated GDP share, in (0, 1]
};

// Accumulated shares after sorting regions by per-capita GDP ascending
// (ties broken by region_id); the final point is (1, 1) and the curve lies
// on or below the diagonal.
struct LorenzCurve {
    std::vector<LorenzPoint> points;
    int year = 0;
};

LorenzCurve lorenz_curve(std::span<const YearObservation> slice, int year = 0);

// Least-squares exponent of the power fit gdp_share = pop_share^beta:
//   beta = sum(ln X_i ln Y_i) / sum((ln X_i)^2)
// over all curve points (the (1,1) point contributes zero to both sums).
double fit_beta(const LorenzCurve& curve);

struct GiniResult {
    double gini = 0.0;          // (beta - 1) / (beta + 1)
    double beta = 1.0;
    double fit_residual = 0.0;  // sum of squared log-residuals
};

GiniResult gini_curvefit(const LorenzCurve& curve);

// Area-based Gini of the piecewise-linear Lorenz curve:
//   G = 1 - sum (X_i - X_{i-1})(Y_i + Y_{i-1})   with (X_0, Y_0) = (0, 0).
// Serves as the oracle against which the curve-fit estimator is checked.
double gini_exact(std::span<const YearObservation> slice);

// Theil-T entropy: T = sum Y_i log(Y_i / P_i) with the 0 log 0 = 0
// convention; shares are computed from the slice.
double theil(std::span<const YearObservation> slice, LogBase base = LogBase::Natural);

// Share-level form for callers that already hold the share vectors.
double theil_from_shares(std::span<const double> gdp_shares, std::span<const double> pop_shares,
                         LogBase base = LogBase::Natural);

struct GroupTerm {
    double weight = 0.0;  // group share of total GDP
    double value = 0.0;   // within-group Theil
};

// total = between + sum_g weight_g * value_g (additivity holds to 1e-12).
struct TheilDecomposition {
    double total = 0.0;
    double between = 0.0;
    std::map<std::string, GroupTerm> within;
};

using GroupOf = std::function<std::string(const YearObservation&)>;

// One-stage GDP-share-weighted Theil-T decomposition. The default grouping
// is the observation's supra-region; any string-keyed grouping works (e.g.
// singleton groups). If required_groups is given, each listed group must
// have at least one member (EmptyGroup otherwise).
TheilDecomposition theil_decompose(std::span<const YearObservation> slice,
                                   LogBase base = LogBase::Natural);
TheilDecomposition theil_decompose(std::span<const YearObservation> slice, const GroupOf& group_of,
                                   LogBase base = LogBase::Natural,
                                   const std::vector<std::string>* required_groups = nullptr);

enum class DisparityMetric { GiniCurveFit, GiniExact, Theil };

std::string_view to_string(DisparityMetric metric);

struct DisparitySeries {
    DisparityMetric metric = DisparityMetric::Theil;
    std::vector<std::pair<int, double>> values;  // strictly increasing years
    std::vector<std::string> warnings;           // skipped years etc.
};

// Evaluates the metric independently per year over the regions present that
// year. Years with too few regions are skipped with a warning; it is an
// error only if every year fails. The panel must be constant-price unless
// allow_nominal is set.
DisparitySeries disparity_series(const RegionalPanel& panel, DisparityMetric metric,
                                 LogBase base = LogBase::Natural, bool allow_nominal = false);

}  // namespace disparity
