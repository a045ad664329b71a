#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "disparity/inequality.hpp"
#include "disparity/panel.hpp"
#include "disparity/rs_analysis.hpp"

namespace disparity::cli {

enum class OutputFormat { Csv, Json, TsvPlot };

OutputFormat parse_format(const std::string& text);
LogBase parse_log_base(const std::string& text);
std::vector<YearRange> parse_periods(const std::string& text);
std::string format_number(double value, int precision);

struct RunConfig {
    std::string input_path;
    int base_year = 1978;
    LogBase log_base = LogBase::Natural;
    std::vector<YearRange> periods;  // empty means the default sub-periods
    double epsilon = 0.05;
    OutputFormat format = OutputFormat::Csv;
    int precision = 6;
    PriceBasis::Kind price_basis = PriceBasis::Kind::Nominal;
    bool allow_nominal = false;
};

struct HurstOptions {
    std::string metric = "theil";  // theil | gini-curvefit | gini-exact
    std::string series_path;       // when set, read a one-value-per-line file
};

struct FgnOptions {
    double hurst_true = 0.7;
    std::size_t length = 1024;
    std::uint64_t seed = 0;
};

struct ValidateOptions {
    std::string tables_path = "data/paper_tables.json";
};

// Each command writes its table to `out`, diagnostics to `err`, and returns
// the process exit code: 0 success, 1 input error, 2 computation error.
int cmd_metrics(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ratios(const RunConfig& config, const std::string& numerator,
               const std::string& denominator, std::ostream& out, std::ostream& err);
int cmd_hurst(const RunConfig& config, const HurstOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_gen_fgn(const FgnOptions& options, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, const ValidateOptions& options, std::ostream& out,
                 std::ostream& err);

}  // namespace disparity::cli
