#pragma once

#include "latlip/diagonal.hpp"
#include "latlip/operator.hpp"
#include "latlip/types.hpp"

#include <cstdint>
#include <vector>

namespace latlip {

/// Spread of the per-survivor Gaussian proposals, as a function of the
/// survivor's diagonal error e:
///   code:    standard deviation tau * e
///   density: standard deviation sqrt(tau * e / 2)
enum class VarianceMode { code, density };

struct SearchConfig {
    int n = 250;      // initial uniform samples
    int n0 = 50;      // survivors kept after selection
    int n1 = 10;      // Gaussian proposals per survivor per step
    double tau = 5.0; // variance fitting parameter
    int steps = 5;    // refinement iterations
    Box box = Box::cube(2, -5.0, 5.0);
    std::uint64_t rng_seed = 1;
    VarianceMode variance_mode = VarianceMode::code;

    /// Throws std::invalid_argument unless 0 < n0 <= n, n1 >= 1,
    /// steps >= 0 and tau > 0.
    void validate() const;
};

/// Cloud of scored samples plus the error trace of the refinement.
/// Histories share indexing: entry 0 is the state at selection, entry k
/// the state after the k-th refinement step.
struct EigenCloud {
    std::vector<EigenSample> samples;
    std::vector<double> mean_error_history;
    std::vector<std::vector<double>> survivor_error_trace;
    SearchConfig config;

    double mean_error() const;
};

/// n i.i.d. uniform samples on the box, scored and stably sorted by
/// ascending error (ties keep sampling order).
EigenCloud seed_uniform(const OperatorHandle& T, const SearchConfig& cfg);

/// Keeps the n0 samples with smallest error (stable) and restarts the
/// error histories at the selection state.
EigenCloud select_best(EigenCloud cloud, int n0);

/// One refinement pass: every survivor draws n1 Gaussian proposals
/// centered on itself with spread scaled by its own error, proposals are
/// clamped to the box and scored at their stored (clamped) coordinates,
/// and the survivor moves to the best candidate. The incumbent is part of
/// the candidate set and wins ties, so a survivor's error never increases.
/// Each survivor uses an RNG substream keyed by (seed, survivor, step);
/// survivors may therefore be refined in parallel without changing the
/// result.
EigenCloud refine_step(const OperatorHandle& T, EigenCloud cloud, const SearchConfig& cfg);

/// seed_uniform, select_best(n0), then cfg.steps refinement passes.
EigenCloud run_search(const OperatorHandle& T, const SearchConfig& cfg);

}  // namespace latlip
