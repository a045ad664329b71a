#include "disparity/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "disparity/errors.hpp"

namespace disparity {
namespace {

double log_in_base(double x, LogBase base) {
    return base == LogBase::Natural ? std::log(x) : std::log10(x);
}

std::vector<std::size_t> ascending_per_capita_order(std::span<const YearObservation> slice) {
    std::vector<std::size_t> order(slice.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&slice](std::size_t a, std::size_t b) {
        const double pa = slice[a].per_capita();
        const double pb = slice[b].per_capita();
        if (pa != pb) return pa < pb;
        return slice[a].region_id < slice[b].region_id;
    });
    return order;
}

struct Shares {
    std::vector<double> gdp;
    std::vector<double> pop;
};

Shares shares_of(std::span<const YearObservation> slice) {
    double gdp_total = 0.0;
    double pop_total = 0.0;
    for (const auto& obs : slice) {
        gdp_total += obs.gdp;
        pop_total += obs.population;
    }
    Shares shares;
    shares.gdp.reserve(slice.size());
    shares.pop.reserve(slice.size());
    for (const auto& obs : slice) {
        shares.gdp.push_back(obs.gdp / gdp_total);
        shares.pop.push_back(obs.population / pop_total);
    }
    return shares;
}

}  // namespace

LorenzCurve lorenz_curve(std::span<const YearObservation> slice, int year) {
    if (slice.size() < 2) {
        throw TooFewRegions(slice.size());
    }
    const auto order = ascending_per_capita_order(slice);
    double gdp_total = 0.0;
    double pop_total = 0.0;
    for (const auto& obs : slice) {
        gdp_total += obs.gdp;
        pop_total += obs.population;
    }

    LorenzCurve curve;
    curve.year = year;
    curve.points.reserve(slice.size());
    double gdp_acc = 0.0;
    double pop_acc = 0.0;
    for (std::size_t idx : order) {
        gdp_acc += slice[idx].gdp;
        pop_acc += slice[idx].population;
        curve.points.push_back({pop_acc / pop_total, gdp_acc / gdp_total});
    }
    return curve;
}

double fit_beta(const LorenzCurve& curve) {
    double xy = 0.0;
    double xx = 0.0;
    for (const auto& p : curve.points) {
        const double lx = std::log(p.pop_share);
        const double ly = std::log(p.gdp_share);
        xy += lx * ly;
        xx += lx * lx;
    }
    if (xx == 0.0) {
        throw DegenerateFit();
    }
    return xy / xx;
}

GiniResult gini_curvefit(const LorenzCurve& curve) {
    GiniResult result;
    result.beta = fit_beta(curve);
    result.gini = (result.beta - 1.0) / (result.beta + 1.0);
    for (const auto& p : curve.points) {
        const double residual = std::log(p.gdp_share) - result.beta * std::log(p.pop_share);
        result.fit_residual += residual * residual;
    }
    return result;
}

double gini_exact(std::span<const YearObservation> slice) {
    const LorenzCurve curve = lorenz_curve(slice);
    double area2 = 0.0;  // twice the area under the polyline
    double prev_x = 0.0;
    double prev_y = 0.0;
    for (const auto& p : curve.points) {
        area2 += (p.pop_share - prev_x) * (p.gdp_share + prev_y);
        prev_x = p.pop_share;
        prev_y = p.gdp_share;
    }
    return 1.0 - area2;
}

double theil_from_shares(std::span<const double> gdp_shares, std::span<const double> pop_shares,
                         LogBase base) {
    if (gdp_shares.size() != pop_shares.size()) {
        throw ComputeError("share vectors differ in length");
    }
    double gdp_sum = 0.0;
    double pop_sum = 0.0;
    for (std::size_t i = 0; i < gdp_shares.size(); ++i) {
        gdp_sum += gdp_shares[i];
        pop_sum += pop_shares[i];
    }
    if (std::abs(gdp_sum - 1.0) > 1e-9 || std::abs(pop_sum - 1.0) > 1e-9) {
        throw ComputeError("shares must each sum to 1");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < gdp_shares.size(); ++i) {
        const double y = gdp_shares[i];
        const double p = pop_shares[i];
        if (y == 0.0) continue;  // 0 log 0 = 0
        if (p == 0.0) {
            throw ZeroPopulationShare(i);
        }
        total += y * log_in_base(y / p, base);
    }
    return total;
}

double theil(std::span<const YearObservation> slice, LogBase base) {
    const Shares shares = shares_of(slice);
    return theil_from_shares(shares.gdp, shares.pop, base);
}

TheilDecomposition theil_decompose(std::span<const YearObservation> slice, LogBase base) {
    return theil_decompose(
        slice, [](const YearObservation& obs) { return std::string(to_string(obs.supra_region)); },
        base);
}

TheilDecomposition theil_decompose(std::span<const YearObservation> slice, const GroupOf& group_of,
                                   LogBase base, const std::vector<std::string>* required_groups) {
    const Shares shares = shares_of(slice);

    struct GroupSums {
        double gdp = 0.0;
        double pop = 0.0;
        std::vector<std::size_t> members;
    };
    std::map<std::string, GroupSums> groups;
    for (std::size_t i = 0; i < slice.size(); ++i) {
        auto& g = groups[group_of(slice[i])];
        g.gdp += shares.gdp[i];
        g.pop += shares.pop[i];
        g.members.push_back(i);
    }
    if (required_groups != nullptr) {
        for (const auto& name : *required_groups) {
            if (!groups.contains(name)) {
                throw EmptyGroup(name);
            }
        }
    }

    TheilDecomposition result;
    result.total = theil_from_shares(shares.gdp, shares.pop, base);
    for (const auto& [name, g] : groups) {
        if (g.gdp > 0.0) {
            result.between += g.gdp * log_in_base(g.gdp / g.pop, base);
        }
        GroupTerm term;
        term.weight = g.gdp;
        for (std::size_t i : g.members) {
            const double y = shares.gdp[i] / g.gdp;
            const double p = shares.pop[i] / g.pop;
            if (y == 0.0) continue;
            term.value += y * log_in_base(y / p, base);
        }
        result.within.emplace(name, term);
    }
    return result;
}

std::string_view to_string(DisparityMetric metric) {
    switch (metric) {
        case DisparityMetric::GiniCurveFit: return "gini_curvefit";
        case DisparityMetric::GiniExact: return "gini_exact";
        case DisparityMetric::Theil: return "theil";
    }
    return "unknown";
}

DisparitySeries disparity_series(const RegionalPanel& panel, DisparityMetric metric, LogBase base,
                                 bool allow_nominal) {
    if (panel.price_basis().is_nominal() && !allow_nominal) {
        throw InputError(
            "panel is in nominal prices; deflate it first or explicitly allow nominal input");
    }
    DisparitySeries series;
    series.metric = metric;
    std::size_t failures = 0;
    std::string first_error;
    for (int year : panel.years()) {
        const auto slice = panel.year_slice(year);
        try {
            double value = 0.0;
            switch (metric) {
                case DisparityMetric::GiniCurveFit:
                    value = gini_curvefit(lorenz_curve(slice, year)).gini;
                    break;
                case DisparityMetric::GiniExact:
                    value = gini_exact(slice);
                    break;
                case DisparityMetric::Theil:
                    value = theil(slice, base);
                    break;
            }
            series.values.emplace_back(year, value);
        } catch (const ComputeError& e) {
            ++failures;
            if (first_error.empty()) first_error = e.what();
            series.warnings.push_back("year " + std::to_string(year) + " skipped: " + e.what());
        }
    }
    if (series.values.empty()) {
        throw ComputeError("no year could be evaluated (" + first_error + ")");
    }
    return series;
}

}  // namespace disparity
