#include "disparity/panel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "disparity/errors.hpp"

namespace disparity {
namespace {

constexpr std::array<std::string_view, 12> kCoastal = {
    "beijing", "tianjin",  "hebei",  "liaoning", "shanghai",  "jiangsu",
    "zhejiang", "fujian",  "shandong", "guangdong", "guangxi", "hainan"};
constexpr std::array<std::string_view, 9> kMiddle = {
    "shanxi", "inner mongolian", "jilin", "heilongjiang", "anhui",
    "jiangxi", "henan", "hubei", "hunan"};
constexpr std::array<std::string_view, 10> kWestern = {
    "yunnan", "guizhou", "sichuan", "chongqing", "tibet",
    "shaanxi", "gansu", "qinghai", "ningxia", "xinjiang"};

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

std::string canonical_name(std::string_view region_name) {
    std::string key = lower(trim(region_name));
    std::replace(key.begin(), key.end(), '-', ' ');
    std::replace(key.begin(), key.end(), '_', ' ');
    // collapse internal runs of spaces
    std::string collapsed;
    collapsed.reserve(key.size());
    for (char c : key) {
        if (c == ' ' && !collapsed.empty() && collapsed.back() == ' ') continue;
        collapsed.push_back(c);
    }
    // common alternate spellings
    if (collapsed == "inner mongolia" || collapsed == "neimenggu" || collapsed == "nei mongol") {
        return "inner mongolian";
    }
    if (collapsed == "xizang") return "tibet";
    return collapsed;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

double parse_double(std::string_view text, int line, std::string_view field) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw MalformedRow(line, "cannot parse " + std::string(field) + " from '" +
                                     std::string(text) + "'");
    }
    return value;
}

int parse_int(std::string_view text, int line, std::string_view field) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw MalformedRow(line, "cannot parse " + std::string(field) + " from '" +
                                     std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string_view to_string(SupraRegion region) {
    switch (region) {
        case SupraRegion::Coastal: return "coastal";
        case SupraRegion::Middle: return "middle";
        case SupraRegion::Western: return "western";
    }
    return "unknown";
}

SupraRegion parse_supra_region(std::string_view text) {
    const std::string key = lower(trim(text));
    if (key == "coastal") return SupraRegion::Coastal;
    if (key == "middle") return SupraRegion::Middle;
    if (key == "western") return SupraRegion::Western;
    throw InputError("invalid supra_region value: '" + std::string(text) +
                     "' (expected coastal, middle or western)");
}

std::optional<SupraRegion> lookup_supra_region(std::string_view region_name) {
    const std::string key = canonical_name(region_name);
    if (std::find(kCoastal.begin(), kCoastal.end(), key) != kCoastal.end()) {
        return SupraRegion::Coastal;
    }
    if (std::find(kMiddle.begin(), kMiddle.end(), key) != kMiddle.end()) {
        return SupraRegion::Middle;
    }
    if (std::find(kWestern.begin(), kWestern.end(), key) != kWestern.end()) {
        return SupraRegion::Western;
    }
    return std::nullopt;
}

SupraRegion supra_region_of(std::string_view region_name) {
    if (auto region = lookup_supra_region(region_name)) return *region;
    throw UnknownRegion(std::string(region_name));
}

std::span<const std::string_view> provinces_of(SupraRegion region) {
    switch (region) {
        case SupraRegion::Coastal: return kCoastal;
        case SupraRegion::Middle: return kMiddle;
        case SupraRegion::Western: return kWestern;
    }
    return {};
}

RegionalPanel::RegionalPanel(std::vector<ProvinceObservation> observations, PriceBasis basis)
    : observations_(std::move(observations)), basis_(basis) {
    if (observations_.empty()) {
        throw InputError("panel has no observations");
    }
    std::sort(observations_.begin(), observations_.end(),
              [](const ProvinceObservation& a, const ProvinceObservation& b) {
                  if (a.region_id != b.region_id) return a.region_id < b.region_id;
                  return a.year < b.year;
              });

    std::map<std::string, SupraRegion> supra_of;
    std::set<int> year_set;
    const ProvinceObservation* prev = nullptr;
    for (const auto& obs : observations_) {
        if (prev != nullptr && prev->region_id == obs.region_id && prev->year == obs.year) {
            throw DuplicateKey(obs.region_id, obs.year);
        }
        if (!(obs.gdp > 0.0)) {
            throw NonPositiveValue("gdp", obs.region_id, obs.year);
        }
        if (!(obs.population > 0.0)) {
            throw NonPositiveValue("population", obs.region_id, obs.year);
        }
        if (obs.growth_index && *obs.growth_index < 0.0) {
            throw InvalidGrowthIndex(obs.region_id, obs.year, "negative index rejected");
        }
        auto [it, inserted] = supra_of.emplace(obs.region_id, obs.supra_region);
        if (!inserted && it->second != obs.supra_region) {
            throw InconsistentSupraRegion(obs.region_id);
        }
        year_set.insert(obs.year);
        // first row per region is its first year (observations are sorted)
        if ((prev == nullptr || prev->region_id != obs.region_id) && obs.growth_index &&
            std::abs(*obs.growth_index - 1.0) > 1e-9) {
            throw InvalidGrowthIndex(obs.region_id, obs.year,
                                     "index must be 1.0 at the region's first year");
        }
        prev = &obs;
    }

    years_.assign(year_set.begin(), year_set.end());
    year_range_ = {years_.front(), years_.back()};

    // Canonical-list cross-check is advisory: the supra column drives the
    // grouping so the tool generalizes beyond the built-in province lists.
    std::set<std::string> checked;
    for (const auto& obs : observations_) {
        if (!checked.insert(obs.region_id).second) continue;
        if (auto canonical = lookup_supra_region(obs.region_name);
            canonical && *canonical != obs.supra_region) {
            warnings_.push_back("region " + obs.region_name + " is listed as " +
                                std::string(to_string(*canonical)) + " but the panel assigns " +
                                std::string(to_string(obs.supra_region)));
        }
    }
}

bool RegionalPanel::has_year(int year) const {
    return std::any_of(observations_.begin(), observations_.end(),
                       [year](const ProvinceObservation& o) { return o.year == year; });
}

std::vector<YearObservation> RegionalPanel::year_slice(int year) const {
    std::vector<YearObservation> slice;
    for (const auto& obs : observations_) {
        if (obs.year == year) {
            slice.push_back({obs.region_id, obs.gdp, obs.population, obs.supra_region});
        }
    }
    if (slice.empty()) {
        throw EmptyYear(year);
    }
    std::sort(slice.begin(), slice.end(), [](const YearObservation& a, const YearObservation& b) {
        return a.region_id < b.region_id;
    });
    return slice;
}

const ProvinceObservation* RegionalPanel::find(std::string_view region_id, int year) const {
    auto it = std::lower_bound(
        observations_.begin(), observations_.end(), std::make_pair(region_id, year),
        [](const ProvinceObservation& obs, const std::pair<std::string_view, int>& key) {
            if (obs.region_id != key.first) return obs.region_id < key.first;
            return obs.year < key.second;
        });
    if (it != observations_.end() && it->region_id == region_id && it->year == year) {
        return &*it;
    }
    return nullptr;
}

std::vector<std::string> RegionalPanel::region_ids() const {
    std::vector<std::string> ids;
    for (const auto& obs : observations_) {
        if (ids.empty() || ids.back() != obs.region_id) {
            ids.push_back(obs.region_id);
        }
    }
    return ids;
}

RegionalPanel load_panel(std::istream& in, const LoadOptions& options) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) {
        throw MalformedRow(1, "empty input: header row required");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        const auto header = split_fields(line);
        const std::array<std::string_view, 7> expected = {
            "region_id", "region_name", "supra_region", "year",
            "gdp",       "population",  "growth_index"};
        if (header.size() != expected.size()) {
            throw MalformedRow(1, "header must have 7 columns");
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (lower(header[i]) != expected[i]) {
                throw MalformedRow(1, "header column " + std::to_string(i + 1) + " must be '" +
                                          std::string(expected[i]) + "'");
            }
        }
    }

    std::vector<ProvinceObservation> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        const auto fields = split_fields(line);
        if (fields.size() != 7 && fields.size() != 6) {
            throw MalformedRow(line_no, "expected 7 columns, got " + std::to_string(fields.size()));
        }

        ProvinceObservation obs;
        obs.region_id = std::string(fields[0]);
        obs.region_name = std::string(fields[1]);
        if (obs.region_id.empty()) {
            throw MalformedRow(line_no, "region_id must be non-empty");
        }
        try {
            obs.supra_region = parse_supra_region(fields[2]);
        } catch (const InputError& e) {
            throw MalformedRow(line_no, e.what());
        }
        obs.year = parse_int(fields[3], line_no, "year");
        obs.gdp = parse_double(fields[4], line_no, "gdp");
        obs.population = parse_double(fields[5], line_no, "population");
        if (fields.size() == 7 && !fields[6].empty()) {
            obs.growth_index = parse_double(fields[6], line_no, "growth_index");
        } else if (options.require_growth_index) {
            throw MissingIndex(obs.region_id, obs.year);
        }
        rows.push_back(std::move(obs));
    }

    return RegionalPanel(std::move(rows), options.basis);
}

void write_panel(const RegionalPanel& panel, std::ostream& out) {
    out << "region_id,region_name,supra_region,year,gdp,population,growth_index\n";
    char buf[64];
    const auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& obs : panel.observations()) {
        out << obs.region_id << ',' << obs.region_name << ',' << to_string(obs.supra_region) << ','
            << obs.year << ',' << num(obs.gdp) << ',' << num(obs.population) << ',';
        if (obs.growth_index) {
            out << num(*obs.growth_index);
        }
        out << '\n';
    }
}

}  // namespace disparity
