#pragma once

#include "latlip/basisframe.hpp"
#include "latlip/eigensearch.hpp"
#include "latlip/operator.hpp"
#include "latlip/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latlip {

/// Full run configuration: flat key-value text with one section per
/// pipeline stage. Defaults are the stock experiment (operator f5 on
/// [-5,5]^2, n=250, n0=50, n1=10, tau=5, steps=5, pca basis, alpha=0.1,
/// 10^4 Monte Carlo points), so an empty config is a valid run.
/// Unknown sections or keys are rejected.
struct RunConfig {
    // [operator]
    std::string operator_key = "f5";
    double r = 0.0;      // parameter of operator R; only accepted for key = R
    bool r_set = false;

    // [search]
    int n = 250;
    int n0 = 50;
    int n1 = 10;
    double tau = 5.0;
    int steps = 5;
    double box_min = -5.0;
    double box_max = 5.0;
    std::uint64_t seed = 1;
    VarianceMode variance_mode = VarianceMode::code;
    std::string distribution = "uniform";  // sampling family hook; uniform only

    // [basis]
    BasisSource basis_mode = BasisSource::pca;
    PcaOptions::Center center = PcaOptions::Center::mean;
    double tol_angle = 0.17453292519943295;  // 10 degrees, direct-mode clustering
    std::vector<Vec> sigmas;                 // octant mode sign vectors
    std::vector<Vec> user_vectors;           // user mode basis columns

    // [extension]
    double alpha = 0.1;

    // [evaluate]
    int eval_grid = 41;

    // [benchmark]
    long mc_points = 10000;
    int audit_grid = 21;

    /// Throws ConfigError on invalid values or inconsistent combinations.
    void validate() const;

    OperatorHandle make_op() const;
    SearchConfig search_config(int dim) const;

    bool operator==(const RunConfig& other) const;
};

/// Parses the key-value text; unknown keys, unknown sections and
/// malformed values raise ConfigError. The result is validated.
RunConfig parse_config(const std::string& text);

/// Serializes the effective configuration (defaults resolved). The output
/// re-parses to an equal RunConfig.
std::string write_config(const RunConfig& cfg);

}  // namespace latlip
