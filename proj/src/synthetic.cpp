#include "disparity/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "disparity/errors.hpp"

namespace disparity {
namespace {

// Deterministic standard normals: Box-Muller over mt19937_64 uniforms.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform01() {
        // 53-bit mantissa, offset by half an ulp so the value is in (0, 1)
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

double fgn_autocovariance(double hurst_true, std::size_t lag) {
    const double h2 = 2.0 * hurst_true;
    const double k = static_cast<double>(lag);
    return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) +
                  std::pow(std::abs(k - 1.0), h2));
}

std::vector<double> generate_fgn(const FgnSpec& spec) {
    if (!(spec.hurst_true > 0.0 && spec.hurst_true < 1.0)) {
        throw std::invalid_argument("hurst_true must lie in (0, 1)");
    }
    if (spec.length < 8) {
        throw std::invalid_argument("length must be at least 8");
    }
    const std::size_t n = spec.length;

    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k) {
        gamma[k] = fgn_autocovariance(spec.hurst_true, k);
    }

    GaussianStream z(spec.seed);
    std::vector<double> series(n);
    series[0] = z.next() * std::sqrt(gamma[0]);

    // Durbin-Levinson: phi holds the coefficients of the conditional mean of
    // X_i given X_{i-1}..X_0; v is the conditional variance.
    std::vector<double> phi(n, 0.0);
    std::vector<double> phi_prev(n, 0.0);
    double v = gamma[0];
    for (std::size_t i = 1; i < n; ++i) {
        double acc = gamma[i];
        for (std::size_t j = 1; j < i; ++j) {
            acc -= phi_prev[j - 1] * gamma[i - j];
        }
        const double reflection = acc / v;
        phi[i - 1] = reflection;
        for (std::size_t j = 0; j + 1 < i; ++j) {
            phi[j] = phi_prev[j] - reflection * phi_prev[i - 2 - j];
        }
        v *= (1.0 - reflection * reflection);
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw EmbeddingFailure("conditional variance fell to " + std::to_string(v) +
                                   " at step " + std::to_string(i));
        }
        double mean = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
            mean += phi[j] * series[i - 1 - j];
        }
        series[i] = mean + std::sqrt(v) * z.next();
        phi_prev = phi;
    }
    return series;
}

RegionalPanel generate_equal_panel(std::size_t regions, std::size_t years,
                                   double per_capita_gdp) {
    if (regions < 2) {
        throw std::invalid_argument("need at least 2 regions");
    }
    if (years < 1) {
        throw std::invalid_argument("need at least 1 year");
    }
    if (!(per_capita_gdp > 0.0)) {
        throw std::invalid_argument("per-capita GDP must be positive");
    }
    constexpr SupraRegion kCycle[] = {SupraRegion::Coastal, SupraRegion::Middle,
                                      SupraRegion::Western};
    constexpr int kFirstYear = 1952;

    std::vector<ProvinceObservation> rows;
    rows.reserve(regions * years);
    for (std::size_t r = 0; r < regions; ++r) {
        const double population = 1000.0 * static_cast<double>(r + 1);
        char id[32];
        std::snprintf(id, sizeof id, "r%02zu", r + 1);
        for (std::size_t t = 0; t < years; ++t) {
            ProvinceObservation obs;
            obs.region_id = id;
            obs.region_name = id;
            obs.supra_region = kCycle[r % 3];
            obs.year = kFirstYear + static_cast<int>(t);
            obs.population = population;
            obs.gdp = per_capita_gdp * population;
            obs.growth_index = 1.0;
            rows.push_back(std::move(obs));
        }
    }
    return RegionalPanel(std::move(rows), PriceBasis::nominal());
}

}  // namespace disparity
