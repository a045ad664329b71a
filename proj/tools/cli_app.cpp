#include "cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "disparity/deflation.hpp"
#include "disparity/errors.hpp"
#include "disparity/ratios.hpp"
#include "disparity/synthetic.hpp"

namespace disparity::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// A cell is either text, a number (formatted at the configured precision in
// every output format), or empty.
struct Cell {
    enum class Kind { Empty, Text, Number, Integer } kind = Kind::Empty;
    std::string text;
    double number = 0.0;
    long long integer = 0;

    static Cell empty() { return {}; }
    static Cell of(std::string value) { return {Kind::Text, std::move(value), 0.0, 0}; }
    static Cell of(double value) { return {Kind::Number, {}, value, 0}; }
    static Cell of(long long value) { return {Kind::Integer, {}, 0.0, value}; }
    static Cell of(int value) { return of(static_cast<long long>(value)); }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void emit_csv(const Table& table, int precision, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c == 0 ? "" : ",") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) out << ',';
            switch (row[c].kind) {
                case Cell::Kind::Empty: break;
                case Cell::Kind::Text: out << row[c].text; break;
                case Cell::Kind::Number: out << format_number(row[c].number, precision); break;
                case Cell::Kind::Integer: out << row[c].integer; break;
            }
        }
        out << '\n';
    }
}

void emit_json(const Table& table, const std::string& command, int precision, std::ostream& out) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            switch (row[c].kind) {
                case Cell::Kind::Empty:
                    obj[table.columns[c]] = nullptr;
                    break;
                case Cell::Kind::Text:
                    obj[table.columns[c]] = row[c].text;
                    break;
                case Cell::Kind::Number:
                    // round through the formatter so csv and json agree
                    obj[table.columns[c]] = std::stod(format_number(row[c].number, precision));
                    break;
                case Cell::Kind::Integer:
                    obj[table.columns[c]] = row[c].integer;
                    break;
            }
        }
        rows.push_back(std::move(obj));
    }
    ordered_json doc = ordered_json::object();
    doc["command"] = command;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

// Plot emission: one (key, value) block per numeric column, keyed by the
// first column, blocks separated by a blank line.
void emit_tsv_plot(const Table& table, int precision, std::ostream& out) {
    for (std::size_t c = 1; c < table.columns.size(); ++c) {
        bool numeric = false;
        for (const auto& row : table.rows) {
            if (row[c].kind == Cell::Kind::Number) numeric = true;
        }
        if (!numeric) continue;
        out << "# series: " << table.columns[c] << '\n';
        for (const auto& row : table.rows) {
            if (row[c].kind != Cell::Kind::Number) continue;
            switch (row[0].kind) {
                case Cell::Kind::Empty: break;
                case Cell::Kind::Text: out << row[0].text; break;
                case Cell::Kind::Number: out << format_number(row[0].number, precision); break;
                case Cell::Kind::Integer: out << row[0].integer; break;
            }
            out << '\t' << format_number(row[c].number, precision) << '\n';
        }
        out << '\n';
    }
}

void emit(const Table& table, const RunConfig& config, const std::string& command,
          std::ostream& out) {
    switch (config.format) {
        case OutputFormat::Csv: emit_csv(table, config.precision, out); break;
        case OutputFormat::Json: emit_json(table, command, config.precision, out); break;
        case OutputFormat::TsvPlot: emit_tsv_plot(table, config.precision, out); break;
    }
}

RegionalPanel load_input(const RunConfig& config) {
    if (config.input_path.empty()) {
        throw InputError("no input file given (use --input)");
    }
    std::ifstream in(config.input_path);
    if (!in) {
        throw InputError("cannot open input file: " + config.input_path);
    }
    LoadOptions options;
    if (config.price_basis == PriceBasis::Kind::ConstantPrice) {
        options.basis = PriceBasis::constant_price(config.base_year);
        options.require_growth_index = false;
    } else {
        options.basis = PriceBasis::nominal();
        options.require_growth_index = !config.allow_nominal;
    }
    return load_panel(in, options);
}

// Loads and, for nominal input, deflates to the configured base year.
RegionalPanel prepare_panel(const RunConfig& config, std::ostream& err) {
    RegionalPanel panel = load_input(config);
    for (const auto& warning : panel.warnings()) {
        err << "warning: " << warning << '\n';
    }
    if (!panel.price_basis().is_nominal()) {
        return panel;
    }
    if (config.allow_nominal) {
        return panel;
    }
    return deflate(panel, config.base_year);
}

RatioOperand resolve_operand(const RegionalPanel& panel, const std::string& text) {
    std::string key = text;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (key == "national") {
        return RatioOperand::national();
    }
    std::optional<std::string> by_name;
    for (const auto& obs : panel.observations()) {
        std::string id = obs.region_id;
        std::transform(id.begin(), id.end(), id.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (id == key) {
            return RatioOperand::region(obs.region_id);
        }
        std::string name = obs.region_name;
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (name == key) by_name = obs.region_id;
    }
    if (by_name) {
        return RatioOperand::region(*by_name);
    }
    throw UnknownRegion(text);
}

std::vector<YearRange> periods_or_default(const RunConfig& config) {
    return config.periods.empty() ? default_periods() : config.periods;
}

std::string period_label(const YearRange& period) {
    return std::to_string(period.start_year) + "-" + std::to_string(period.end_year);
}

Table hurst_table(const std::vector<SubperiodHurst>& entries) {
    Table table;
    table.columns = {"period",    "observations", "hurst", "intercept",
                     "r_squared", "correlation",  "class", "note"};
    for (const auto& entry : entries) {
        std::vector<Cell> row;
        row.push_back(Cell::of(period_label(entry.period)));
        row.push_back(Cell::of(static_cast<long long>(entry.observations)));
        if (entry.result) {
            row.push_back(Cell::of(entry.result->hurst));
            row.push_back(Cell::of(entry.result->intercept));
            row.push_back(Cell::of(entry.result->r_squared));
            row.push_back(Cell::of(entry.result->correlation));
            row.push_back(Cell::of(std::string(to_string(entry.persistence->tag))));
        } else {
            row.push_back(Cell::empty());
            row.push_back(Cell::empty());
            row.push_back(Cell::empty());
            row.push_back(Cell::empty());
            row.push_back(Cell::of(std::string("error")));
        }
        row.push_back(entry.note.empty() ? Cell::empty() : Cell::of(entry.note));
        table.rows.push_back(std::move(row));
    }
    return table;
}

int run_guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "tsv-plot") return OutputFormat::TsvPlot;
    throw InputError("unknown output format: " + text);
}

LogBase parse_log_base(const std::string& text) {
    if (text == "natural") return LogBase::Natural;
    if (text == "base10") return LogBase::Base10;
    throw InputError("unknown log base: " + text);
}

std::vector<YearRange> parse_periods(const std::string& text) {
    std::vector<YearRange> periods;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            throw InputError("period must look like 1952-1965, got '" + item + "'");
        }
        try {
            const int start = std::stoi(item.substr(0, dash));
            const int end = std::stoi(item.substr(dash + 1));
            if (end < start) {
                throw InputError("period end before start: '" + item + "'");
            }
            periods.push_back({start, end});
        } catch (const std::invalid_argument&) {
            throw InputError("period must look like 1952-1965, got '" + item + "'");
        }
    }
    if (periods.empty()) {
        throw InputError("empty period list");
    }
    return periods;
}

std::string format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", std::clamp(precision, 1, 17), value);
    return buf;
}

int cmd_metrics(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const RegionalPanel panel = prepare_panel(config, err);
        Table table;
        table.columns = {"year", "gini_curvefit", "gini_exact", "theil", "beta", "fit_residual"};
        for (int year : panel.years()) {
            const auto slice = panel.year_slice(year);
            try {
                const auto fit = gini_curvefit(lorenz_curve(slice, year));
                const double exact = gini_exact(slice);
                const double entropy = theil(slice, config.log_base);
                table.rows.push_back({Cell::of(year), Cell::of(fit.gini),
                                      Cell::of(exact), Cell::of(entropy), Cell::of(fit.beta),
                                      Cell::of(fit.fit_residual)});
            } catch (const ComputeError& e) {
                err << "warning: year " << year << " skipped: " << e.what() << '\n';
            }
        }
        if (table.rows.empty()) {
            throw ComputeError("no year could be evaluated");
        }
        emit(table, config, "metrics", out);
    });
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const RegionalPanel panel = prepare_panel(config, err);

        std::map<int, TheilDecomposition> by_year;
        std::set<std::string> group_names;
        for (int year : panel.years()) {
            const auto slice = panel.year_slice(year);
            try {
                auto parts = theil_decompose(slice, config.log_base);
                for (const auto& [name, term] : parts.within) group_names.insert(name);
                by_year.emplace(year, std::move(parts));
            } catch (const ComputeError& e) {
                err << "warning: year " << year << " skipped: " << e.what() << '\n';
            }
        }
        if (by_year.empty()) {
            throw ComputeError("no year could be evaluated");
        }

        Table table;
        table.columns = {"year", "total", "between", "within_weighted"};
        for (const auto& name : group_names) {
            table.columns.push_back(name + "_weight");
            table.columns.push_back(name + "_within");
        }
        for (const auto& [year, parts] : by_year) {
            double weighted = 0.0;
            for (const auto& [name, term] : parts.within) {
                weighted += term.weight * term.value;
            }
            if (std::abs(parts.total - parts.between - weighted) >
                1e-12 * std::max(1.0, std::abs(parts.total))) {
                throw ComputeError("decomposition identity violated at year " +
                                   std::to_string(year));
            }
            std::vector<Cell> row = {Cell::of(year), Cell::of(parts.total),
                                     Cell::of(parts.between), Cell::of(weighted)};
            for (const auto& name : group_names) {
                auto it = parts.within.find(name);
                if (it == parts.within.end()) {
                    row.push_back(Cell::empty());
                    row.push_back(Cell::empty());
                } else {
                    row.push_back(Cell::of(it->second.weight));
                    row.push_back(Cell::of(it->second.value));
                }
            }
            table.rows.push_back(std::move(row));
        }
        emit(table, config, "decompose", out);
    });
}

int cmd_ratios(const RunConfig& config, const std::string& numerator,
               const std::string& denominator, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const RegionalPanel panel = prepare_panel(config, err);
        const auto series = ratio_series(panel, resolve_operand(panel, numerator),
                                         resolve_operand(panel, denominator));
        Table table;
        table.columns = {"year", series.numerator.label() + "_over_" + series.denominator.label()};
        for (const auto& [year, ratio] : series.values) {
            table.rows.push_back({Cell::of(year), Cell::of(ratio)});
        }
        emit(table, config, "ratios", out);
    });
}

int cmd_hurst(const RunConfig& config, const HurstOptions& options, std::ostream& out,
              std::ostream& err) {
    return run_guarded(err, [&] {
        std::vector<std::pair<int, double>> series;
        if (!options.series_path.empty()) {
            std::ifstream in(options.series_path);
            if (!in) {
                throw InputError("cannot open series file: " + options.series_path);
            }
            std::string line;
            int index = 0;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                try {
                    series.emplace_back(++index, std::stod(line));
                } catch (const std::exception&) {
                    throw InputError("cannot parse series value: '" + line + "'");
                }
            }
            if (series.empty()) {
                throw InputError("series file is empty: " + options.series_path);
            }
        } else {
            const RegionalPanel panel = prepare_panel(config, err);
            DisparityMetric metric = DisparityMetric::Theil;
            if (options.metric == "theil") {
                metric = DisparityMetric::Theil;
            } else if (options.metric == "gini-curvefit") {
                metric = DisparityMetric::GiniCurveFit;
            } else if (options.metric == "gini-exact") {
                metric = DisparityMetric::GiniExact;
            } else {
                throw InputError("unknown metric: " + options.metric);
            }
            const auto disparity =
                disparity_series(panel, metric, config.log_base, config.allow_nominal);
            for (const auto& warning : disparity.warnings) {
                err << "warning: " << warning << '\n';
            }
            series = disparity.values;
        }

        std::vector<YearRange> periods;
        if (!config.periods.empty()) {
            periods = config.periods;
        } else if (!options.series_path.empty()) {
            periods = {{series.front().first, series.back().first}};
        } else {
            periods = default_periods();
        }

        const auto entries = subperiod_hurst(series, periods, config.epsilon);
        emit(hurst_table(entries), config, "hurst", out);
    });
}

int cmd_gen_fgn(const FgnOptions& options, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const auto series = generate_fgn({options.hurst_true, options.length, options.seed});
        for (double value : series) {
            out << format_number(value, 17) << '\n';
        }
    });
}

int cmd_validate(const RunConfig& config, const ValidateOptions& options, std::ostream& out,
                 std::ostream& err) {
    return run_guarded(err, [&] {
        std::ifstream tables_in(options.tables_path);
        if (!tables_in) {
            throw InputError("cannot open reference tables: " + options.tables_path);
        }
        ordered_json tables;
        try {
            tables_in >> tables;
        } catch (const std::exception& e) {
            throw InputError("cannot parse reference tables: " + std::string(e.what()));
        }
        const double ratio_tol = tables.value("ratio_tolerance", 0.0005);
        const double hurst_tol = tables.value("hurst_tolerance", 0.005);

        const RegionalPanel panel = prepare_panel(config, err);

        Table table;
        table.columns = {"item", "key", "expected", "actual", "diff", "status"};
        std::size_t mismatches = 0;
        std::size_t missing = 0;

        const auto compare = [&](const std::string& item, const std::string& key, double expected,
                                 std::optional<double> actual, double tolerance) {
            std::vector<Cell> row = {Cell::of(item), Cell::of(key), Cell::of(expected)};
            if (!actual) {
                row.push_back(Cell::empty());
                row.push_back(Cell::empty());
                row.push_back(Cell::of(std::string("missing")));
                ++missing;
            } else {
                const double diff = *actual - expected;
                row.push_back(Cell::of(*actual));
                row.push_back(Cell::of(diff));
                const bool ok = std::abs(diff) <= tolerance;
                row.push_back(Cell::of(std::string(ok ? "ok" : "mismatch")));
                if (!ok) ++mismatches;
            }
            table.rows.push_back(std::move(row));
        };

        for (const char* item : {"shanghai_over_national", "guizhou_over_national"}) {
            if (!tables.contains(item)) continue;
            const std::string region_key = std::string(item).substr(0, std::string(item).find('_'));
            std::map<int, double> computed;
            try {
                const auto series = ratio_series(panel, resolve_operand(panel, region_key),
                                                 RatioOperand::national());
                computed.insert(series.values.begin(), series.values.end());
            } catch (const UnknownRegion&) {
                // leave empty: every year reports missing
            }
            for (const auto& [year_text, expected] : tables.at(item).items()) {
                std::optional<double> actual;
                if (auto it = computed.find(std::stoi(year_text)); it != computed.end()) {
                    actual = it->second;
                }
                compare(item, year_text, expected.get<double>(), actual, ratio_tol);
            }
        }

        if (tables.contains("theil_hurst")) {
            const auto theil_series =
                disparity_series(panel, DisparityMetric::Theil, config.log_base, false);
            std::vector<YearRange> periods;
            for (const auto& entry : tables.at("theil_hurst")) {
                periods.push_back(parse_periods(entry.at("period").get<std::string>()).front());
            }
            const auto computed = subperiod_hurst(theil_series.values, periods, config.epsilon);
            std::size_t i = 0;
            for (const auto& entry : tables.at("theil_hurst")) {
                std::optional<double> actual;
                if (computed[i].result) actual = computed[i].result->hurst;
                compare("theil_hurst", entry.at("period").get<std::string>(),
                        entry.at("hurst").get<double>(), actual, hurst_tol);
                if (entry.contains("note")) {
                    err << "note: " << entry.at("period").get<std::string>() << ": "
                        << entry.at("note").get<std::string>() << '\n';
                }
                ++i;
            }
        }

        emit(table, config, "validate", out);
        err << "validate: " << mismatches << " mismatches, " << missing << " missing of "
            << table.rows.size() << " comparisons\n";
        if (mismatches + missing > 0) {
            throw ComputeError("panel does not reproduce the reference tables");
        }
    });
}

}  // namespace disparity::cli
