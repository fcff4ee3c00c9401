// Term life insurance pricing under a stochastic hazard rate.
//
// Subcommands: price, converge, mc-check, export-surface.
// Exit codes: 0 success, 1 config error, 2 solver error, 3 validation failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lifepde/commands.hpp"

namespace {

struct Overrides {
    std::optional<double> mu, sigma, lambda_bar, alpha, M, h, k, T;
    std::optional<long> paths;
    std::optional<int> steps_per_year;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out, format, discount_file;
    std::optional<std::vector<double>> lambda0;
    std::optional<std::vector<int>> n;
};

void add_common_options(CLI::App* cmd, std::string& config_path, Overrides& ov) {
    cmd->add_option("--config", config_path, "key=value config file");
    cmd->add_option("--out", ov.out, "output path (default stdout)");
    cmd->add_option("--format", ov.format, "csv | json");
    cmd->add_option("--seed", ov.seed, "Monte Carlo seed");
    cmd->add_option("--mu", ov.mu, "hazard drift");
    cmd->add_option("--sigma", ov.sigma, "hazard volatility");
    cmd->add_option("--lambda-bar", ov.lambda_bar, "hazard floor");
    cmd->add_option("--alpha", ov.alpha, "Sharpe ratio");
    cmd->add_option("--M", ov.M, "grid half-width in y");
    cmd->add_option("--h-step", ov.h, "y step");
    cmd->add_option("--k", ov.k, "tau step");
    cmd->add_option("--T", ov.T, "policy horizon (years)");
    cmd->add_option("--lambda0", ov.lambda0, "initial hazard levels")->delimiter(',');
    cmd->add_option("--n", ov.n, "contract counts")->delimiter(',');
    cmd->add_option("--paths", ov.paths, "Monte Carlo paths");
    cmd->add_option("--steps-per-year", ov.steps_per_year, "Monte Carlo steps per year");
    cmd->add_option("--discount-file", ov.discount_file, "discount curve CSV 's,F'");
}

int load_config(const std::string& config_path, const Overrides& ov,
                lifepde::RunConfig& cfg) {
    try {
        if (!config_path.empty()) cfg = lifepde::RunConfig::parse_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lifepde::kConfigError;
    }
    if (ov.mu) cfg.mu = *ov.mu;
    if (ov.sigma) cfg.sigma = *ov.sigma;
    if (ov.lambda_bar) cfg.lambda_bar = *ov.lambda_bar;
    if (ov.alpha) cfg.alpha = *ov.alpha;
    if (ov.M) cfg.M = *ov.M;
    if (ov.h) cfg.h = *ov.h;
    if (ov.k) cfg.k = *ov.k;
    if (ov.T) cfg.T = *ov.T;
    if (ov.lambda0) cfg.lambda0 = *ov.lambda0;
    if (ov.n) cfg.n = *ov.n;
    if (ov.paths) cfg.paths = *ov.paths;
    if (ov.steps_per_year) cfg.steps_per_year = *ov.steps_per_year;
    if (ov.seed) cfg.seed = *ov.seed;
    if (ov.out) cfg.out = *ov.out;
    if (ov.format) cfg.format = *ov.format;
    if (ov.discount_file) cfg.discount_file = *ov.discount_file;
    if (cfg.format != "csv" && cfg.format != "json") {
        std::cerr << "error: format must be csv or json\n";
        return lifepde::kConfigError;
    }
    return lifepde::kOk;
}

int emit(const lifepde::CommandResult& result, const std::string& out_path) {
    if (!result.output.empty()) {
        if (out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return lifepde::kConfigError;
            }
            out << result.output;
        }
    }
    if (result.exit_code != lifepde::kOk)
        std::cerr << "error: " << result.message << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"term life insurance pricing under a stochastic hazard rate"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides ov;
    std::string quantity = "f";

    auto* price = app.add_subcommand("price", "write a price table");
    add_common_options(price, config_path, ov);
    auto* converge = app.add_subcommand("converge", "per-contract convergence report");
    add_common_options(converge, config_path, ov);
    auto* mc_check = app.add_subcommand("mc-check", "PDE vs Monte Carlo cross-check");
    add_common_options(mc_check, config_path, ov);
    auto* export_surface = app.add_subcommand("export-surface", "dump a surface as CSV");
    add_common_options(export_surface, config_path, ov);
    export_surface->add_option("--quantity", quantity, "f | g | f0 | P | net | A | B");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : lifepde::kConfigError;
    }

    lifepde::RunConfig cfg;
    if (const int rc = load_config(config_path, ov, cfg); rc != lifepde::kOk) return rc;

    lifepde::CommandResult result;
    if (price->parsed()) result = lifepde::cmd_price(cfg);
    else if (converge->parsed()) result = lifepde::cmd_converge(cfg);
    else if (mc_check->parsed()) result = lifepde::cmd_mc_check(cfg);
    else result = lifepde::cmd_export_surface(cfg, quantity);

    return emit(result, cfg.out);
}
