#pragma once

#include "latlip/config.hpp"
#include "latlip/extension.hpp"
#include "latlip/metrics.hpp"

#include <filesystem>

namespace latlip {

// Command implementations behind the CLI. Each one is a pure function of
// (config, input files): re-running with the same inputs produces
// byte-identical outputs. The effective configuration is echoed to
// effective.cfg in the output directory.

/// Runs the eigenvector search; writes cloud.csv, history.csv,
/// summary.json and effective.cfg.
void cmd_eigensearch(const RunConfig& cfg, const std::filesystem::path& outdir);

/// Builds the basis frame per cfg.basis_mode from the cloud (direct mode
/// falls back to pca when not applicable), fits the extension model and
/// writes model.json and effective.cfg. Returns the model.
ExtensionModel cmd_fit(const RunConfig& cfg, const std::filesystem::path& cloud_csv,
                       const std::filesystem::path& outdir);

/// Evaluates a stored model over the config box lattice; writes grid.csv.
void cmd_evaluate(const RunConfig& cfg, const std::filesystem::path& model_json,
                  const std::filesystem::path& outdir);

/// Full pipeline (search, fit, Monte Carlo error, bound audit); writes all
/// stage artifacts plus report.json and report.csv. Returns the report.
ErrorReport cmd_benchmark(const RunConfig& cfg, const std::filesystem::path& outdir);

/// Frame selection shared by fit and benchmark.
BasisFrame choose_frame(const RunConfig& cfg, const EigenCloud& cloud);

}  // namespace latlip
