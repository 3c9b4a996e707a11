// Command-line front end for the lattice Lipschitz approximation pipeline.
//
//   latlip eigensearch [--config c] [--seed s] [--out dir]
//   latlip fit         [--config c] [--seed s] [--out dir] [--cloud file]
//   latlip evaluate    [--config c] [--out dir] [--model file]
//   latlip benchmark   [--config c] [--seed s] [--out dir]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure
// (unbounded constant, degenerate cloud), 1 anything else.

#include "latlip/io.hpp"
#include "latlip/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

namespace {

latlip::RunConfig load_config(const std::string& config_path,
                              const std::optional<std::uint64_t>& seed) {
    latlip::RunConfig cfg;
    if (!config_path.empty())
        cfg = latlip::parse_config(latlip::io::read_file(config_path));
    if (seed) cfg.seed = *seed;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximation of almost diagonal maps by lattice Lipschitz extensions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "Run configuration file")->configurable(false);
    app.add_option("--seed", seed, "Override the RNG seed");
    app.add_option("--out", out_dir, "Output directory");

    auto* search_cmd = app.add_subcommand("eigensearch", "Monte Carlo eigenvector search");
    auto* fit_cmd = app.add_subcommand("fit", "Fit an extension model to a cloud");
    auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate a stored model on a grid");
    auto* bench_cmd = app.add_subcommand("benchmark", "Full pipeline with error report");
    for (auto* cmd : {search_cmd, fit_cmd, eval_cmd, bench_cmd}) cmd->fallthrough();

    std::string cloud_path;
    fit_cmd->add_option("--cloud", cloud_path, "Cloud CSV from a previous eigensearch");
    std::string model_path;
    eval_cmd->add_option("--model", model_path, "Model JSON from a previous fit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const latlip::RunConfig cfg = load_config(config_path, seed);
        const std::filesystem::path out(out_dir);

        if (search_cmd->parsed()) {
            latlip::cmd_eigensearch(cfg, out);
        } else if (fit_cmd->parsed()) {
            if (cloud_path.empty()) cloud_path = (out / "cloud.csv").string();
            latlip::cmd_fit(cfg, cloud_path, out);
        } else if (eval_cmd->parsed()) {
            if (model_path.empty()) model_path = (out / "model.json").string();
            latlip::cmd_evaluate(cfg, model_path, out);
        } else if (bench_cmd->parsed()) {
            const auto report = latlip::cmd_benchmark(cfg, out);
            std::printf("l2_normalized %s\n",
                        latlip::io::format_double(report.l2_normalized).c_str());
        }
        return 0;
    } catch (const latlip::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const latlip::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
