#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace disparity {

enum class SupraRegion { Coastal, Middle, Western };

std::string_view to_string(SupraRegion region);

// Parses a supra-region column value ("coastal" / "middle" / "western",
// case-insensitive). Throws InputError on anything else.
SupraRegion parse_supra_region(std::string_view text);

// The canonical 31-province assignment: 12 coastal, 9 middle, 10 western.
// Matching is case-insensitive on the romanized names (a few common spelling
// aliases are accepted). Throws UnknownRegion for names outside the list.
SupraRegion supra_region_of(std::string_view region_name);
std::optional<SupraRegion> lookup_supra_region(std::string_view region_name);
std::span<const std::string_view> provinces_of(SupraRegion region);

struct ProvinceObservation {
    std::string region_id;
    std::string region_name;
    SupraRegion supra_region = SupraRegion::Coastal;
    int year = 0;
    double gdp = 0.0;         // currency units, > 0
    double population = 0.0;  // persons, > 0
    // Cumulative real-GDP index relative to the region's first year
    // (1.0 at the first year). Absent only in constant-price panels.
    std::optional<double> growth_index;
};

struct PriceBasis {
    enum class Kind { Nominal, ConstantPrice };
    Kind kind = Kind::Nominal;
    int base_year = 0;  // meaningful only for ConstantPrice

    static PriceBasis nominal() { return {}; }
    static PriceBasis constant_price(int base_year) {
        return {Kind::ConstantPrice, base_year};
    }
    bool is_nominal() const { return kind == Kind::Nominal; }
};

// One region's row in a single-year cross-section.
struct YearObservation {
    std::string region_id;
    double gdp = 0.0;
    double population = 0.0;
    SupraRegion supra_region = SupraRegion::Coastal;

    double per_capita() const { return gdp / population; }
};

// Immutable province-by-year panel. Construction validates the invariants:
// unique (region_id, year) keys, positive gdp/population, one supra-region
// per region_id, and growth-index sanity (non-negative, 1.0 at each region's
// first year). Ragged panels are allowed: a region simply has no rows before
// it exists, and per-year queries cover only the regions present that year.
class RegionalPanel {
public:
    RegionalPanel(std::vector<ProvinceObservation> observations, PriceBasis basis);

    const std::vector<ProvinceObservation>& observations() const { return observations_; }
    PriceBasis price_basis() const { return basis_; }
    std::pair<int, int> year_range() const { return year_range_; }
    const std::vector<int>& years() const { return years_; }
    std::size_t size() const { return observations_.size(); }

    // Non-fatal findings from validation (e.g. a recognized province whose
    // supra_region column disagrees with the canonical assignment).
    const std::vector<std::string>& warnings() const { return warnings_; }

    bool has_year(int year) const;
    // All observations for one year, ordered by region_id. Throws EmptyYear.
    std::vector<YearObservation> year_slice(int year) const;
    const ProvinceObservation* find(std::string_view region_id, int year) const;
    std::vector<std::string> region_ids() const;

private:
    std::vector<ProvinceObservation> observations_;  // sorted by (region_id, year)
    PriceBasis basis_;
    std::pair<int, int> year_range_{0, 0};
    std::vector<int> years_;
    std::vector<std::string> warnings_;
};

struct LoadOptions {
    PriceBasis basis = PriceBasis::nominal();
    // A nominal panel normally needs the index for later deflation; pass
    // false to accept rows without one (constant-price input, or metrics
    // explicitly requested on nominal values).
    bool require_growth_index = true;
};

// Reads the CSV schema
//   region_id,region_name,supra_region,year,gdp,population,growth_index
// (header required, UTF-8, plain comma-separated). growth_index may be empty
// when options.require_growth_index is false.
RegionalPanel load_panel(std::istream& in, const LoadOptions& options = {});

// Writes the same schema; load_panel(write_panel(p)) reproduces the
// observation set exactly (doubles are emitted round-trip safe).
void write_panel(const RegionalPanel& panel, std::ostream& out);

}  // namespace disparity
