#pragma once

#include "latlip/eigensearch.hpp"
#include "latlip/extension.hpp"
#include "latlip/operator.hpp"
#include "latlip/types.hpp"

#include <cstdint>
#include <vector>

namespace latlip {

/// Monte Carlo comparison of a model against the operator it approximates.
/// l2_normalized estimates (1/vol(P)) * (integral over P of
/// ||fhat - T||^2)^(1/2) with ambient Euclidean norms; max_pointwise and
/// bound_violations are measured per frame coordinate, where the pointwise
/// certificate lives.
struct ErrorReport {
    double l2_normalized = 0.0;
    Vec max_pointwise;            // per frame coordinate
    long bound_violations = 0;    // points with any violated coordinate
    long mc_points = 0;
    std::uint64_t rng_seed = 0;
    double mean_sq = 0.0;         // mean of ||fhat - T||^2 over the draws
    double mean_sq_se = 0.0;      // standard error of that mean
};

/// Uniform draws x_i on the box (one RNG substream per index, so the map
/// is order-independent); estimator
///   (1/vol(P)) * sqrt( vol(P) * mean ||fhat(x_i) - T(x_i)||^2 ).
ErrorReport mc_l2_error(const OperatorHandle& T, const ExtensionModel& model,
                        const Box& box, long mc_points, std::uint64_t rng_seed);

/// Counts (point, coordinate) pairs on a deterministic lattice of
/// grid_per_axis^n points where |fhat - T|(w) > bound(x)(w) + 1e-9.
/// Zero when the certified inequality holds between every grid point and
/// every sample; may be positive when the constants were estimated from
/// the samples alone (reported, not asserted).
long bound_audit(const OperatorHandle& T, const ExtensionModel& model, const Box& box,
                 int grid_per_axis);

/// Distribution summary of a cloud's diagonal errors and, when reference
/// eigenray directions are supplied, of the angular distance from each
/// sample to the nearest reference ray (a point and its negative are
/// identified).
struct CloudStats {
    std::size_t count = 0;
    double eps_mean = 0.0;
    double eps_median = 0.0;
    double eps_q25 = 0.0;
    double eps_q75 = 0.0;
    double eps_min = 0.0;
    double eps_max = 0.0;
    bool has_reference = false;
    double angle_mean = 0.0;
    double angle_median = 0.0;
    double angle_max = 0.0;
};

CloudStats cloud_quality(const EigenCloud& cloud,
                         const std::vector<Vec>& reference_rays = {});

}  // namespace latlip
