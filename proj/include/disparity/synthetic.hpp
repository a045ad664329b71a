#pragma once

#include <cstdint>
#include <vector>

#include "disparity/panel.hpp"

namespace disparity {

struct FgnSpec {
    double hurst_true = 0.5;     // in (0, 1)
    std::size_t length = 8;      // >= 8
    std::uint64_t seed = 0;      // same spec -> bit-identical series
};

// Theoretical fGn autocovariance
//   gamma(k) = 0.5 (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}),   gamma(0) = 1.
double fgn_autocovariance(double hurst_true, std::size_t lag);

// Stationary Gaussian series with exact fGn covariance, generated by
// recursive conditional simulation (Hosking's method, Durbin-Levinson
// recursion). Randomness is Box-Muller over mt19937_64, so the stream is
// reproducible for a given seed. Throws EmbeddingFailure if the conditional
// variance degenerates numerically.
std::vector<double> generate_fgn(const FgnSpec& spec);

// Panel in which every region-year has the same per-capita GDP, so every
// downstream disparity metric is exactly zero. Regions cycle through the
// three supra-regions; populations differ per region.
RegionalPanel generate_equal_panel(std::size_t regions, std::size_t years,
                                   double per_capita_gdp);

}  // namespace disparity
