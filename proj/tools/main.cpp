#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_app.hpp"
#include "disparity/errors.hpp"

namespace {

using disparity::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& config, std::string& format_text,
                        std::string& log_base_text, std::string& periods_text,
                        std::string& price_basis_text) {
    cmd->add_option("--input,-i", config.input_path, "panel CSV file");
    cmd->add_option("--base-year", config.base_year, "constant-price base year")
        ->capture_default_str();
    cmd->add_option("--log-base", log_base_text, "theil logarithm base: natural or base10")
        ->capture_default_str();
    cmd->add_option("--periods", periods_text,
                    "comma-separated year ranges, e.g. 1952-1965,1966-1978");
    cmd->add_option("--epsilon", config.epsilon, "half-width of the random band around H = 0.5")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 0.499999));
    cmd->add_option("--format", format_text, "output format: csv, json or tsv-plot")
        ->capture_default_str();
    cmd->add_option("--precision", config.precision, "significant digits in numeric output")
        ->capture_default_str()
        ->check(CLI::Range(1, 17));
    cmd->add_option("--price-basis", price_basis_text,
                    "whether the input GDP is nominal or already constant-price")
        ->capture_default_str();
}

void finish_common_options(RunConfig& config, const std::string& format_text,
                           const std::string& log_base_text, const std::string& periods_text,
                           const std::string& price_basis_text) {
    config.format = disparity::cli::parse_format(format_text);
    config.log_base = disparity::cli::parse_log_base(log_base_text);
    if (!periods_text.empty()) {
        config.periods = disparity::cli::parse_periods(periods_text);
    }
    if (price_basis_text == "nominal") {
        config.price_basis = disparity::PriceBasis::Kind::Nominal;
    } else if (price_basis_text == "constant") {
        config.price_basis = disparity::PriceBasis::Kind::ConstantPrice;
    } else {
        throw disparity::InputError("unknown price basis: " + price_basis_text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regional economic disparity toolkit: deflation, Gini/Theil series,\n"
                 "per-capita ratio analysis and rescaled-range persistence classification."};
    app.require_subcommand(1);

    RunConfig config;
    std::string format_text = "csv";
    std::string log_base_text = "natural";
    std::string periods_text;
    std::string price_basis_text = "nominal";

    auto* metrics = app.add_subcommand("metrics", "per-year Gini (curve fit and exact) and Theil");
    add_common_options(metrics, config, format_text, log_base_text, periods_text,
                       price_basis_text);
    metrics->add_flag("--allow-nominal", config.allow_nominal,
                      "compute on nominal values without deflating");

    auto* decompose =
        app.add_subcommand("decompose", "per-year Theil between/within decomposition");
    add_common_options(decompose, config, format_text, log_base_text, periods_text,
                       price_basis_text);
    decompose->add_flag("--allow-nominal", config.allow_nominal,
                        "compute on nominal values without deflating");

    auto* ratios = app.add_subcommand("ratios", "per-capita ratio series of two operands");
    add_common_options(ratios, config, format_text, log_base_text, periods_text,
                       price_basis_text);
    std::string numerator;
    std::string denominator;
    ratios->add_option("numerator", numerator, "region id, region name, or 'national'")
        ->required();
    ratios->add_option("denominator", denominator, "region id, region name, or 'national'")
        ->required();

    auto* hurst = app.add_subcommand("hurst", "sub-period Hurst exponents of a disparity series");
    add_common_options(hurst, config, format_text, log_base_text, periods_text, price_basis_text);
    disparity::cli::HurstOptions hurst_options;
    hurst->add_option("--metric", hurst_options.metric,
                      "disparity metric: theil, gini-curvefit or gini-exact")
        ->capture_default_str();
    hurst->add_option("--series", hurst_options.series_path,
                      "analyze a plain one-value-per-line series file instead of a panel");
    hurst->add_flag("--allow-nominal", config.allow_nominal,
                    "compute on nominal values without deflating");

    auto* gen_fgn = app.add_subcommand(
        "gen-fgn", "emit exact fractional Gaussian noise, one value per line");
    disparity::cli::FgnOptions fgn_options;
    gen_fgn->add_option("--hurst-true", fgn_options.hurst_true, "target Hurst exponent in (0,1)")
        ->capture_default_str();
    gen_fgn->add_option("--length", fgn_options.length, "series length (>= 8)")
        ->capture_default_str();
    gen_fgn->add_option("--seed", fgn_options.seed, "random seed")->capture_default_str();

    auto* validate = app.add_subcommand(
        "validate", "diff a panel's ratio and Hurst results against the reference tables");
    add_common_options(validate, config, format_text, log_base_text, periods_text,
                       price_basis_text);
    disparity::cli::ValidateOptions validate_options;
    validate->add_option("--tables", validate_options.tables_path,
                         "reference tables JSON file")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        app.exit(e);
        return 1;  // bad invocation is an input error
    }

    try {
        finish_common_options(config, format_text, log_base_text, periods_text, price_basis_text);
    } catch (const disparity::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (metrics->parsed()) {
        return disparity::cli::cmd_metrics(config, std::cout, std::cerr);
    }
    if (decompose->parsed()) {
        return disparity::cli::cmd_decompose(config, std::cout, std::cerr);
    }
    if (ratios->parsed()) {
        return disparity::cli::cmd_ratios(config, numerator, denominator, std::cout, std::cerr);
    }
    if (hurst->parsed()) {
        return disparity::cli::cmd_hurst(config, hurst_options, std::cout, std::cerr);
    }
    if (gen_fgn->parsed()) {
        return disparity::cli::cmd_gen_fgn(fgn_options, std::cout, std::cerr);
    }
    if (validate->parsed()) {
        return disparity::cli::cmd_validate(config, validate_options, std::cout, std::cerr);
    }
    return 1;
}
