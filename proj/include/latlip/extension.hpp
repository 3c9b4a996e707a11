#pragma once

#include "latlip/basisframe.hpp"
#include "latlip/operator.hpp"
#include "latlip/types.hpp"

#include <vector>

namespace latlip {

enum class NormKind { euclidean };

/// Everything needed to evaluate the lattice McShane/Whitney extensions of
/// an operator from a finite sample of (point, value) pairs, both expressed
/// in the coordinates of `frame`:
///
///   mcshane(x)(w) = max_z  value(z)(w) - k(w) * blend_w(x, z)
///   whitney(x)(w) = min_z  value(z)(w) + k(w) * blend_w(x, z)
///
/// with blend_w(x, z) = (1-alpha) |x-z|(w) + alpha ||x-z||. The model is
/// certified: every sample pair satisfies
///   |value(x) - value(z)|(w) <= k(w) * blend_w(x, z) + 1e-9,
/// which makes both extensions reproduce the sample values exactly and
/// keeps mcshane <= whitney everywhere. Immutable after construction;
/// queries are pure and safe to run concurrently.
struct ExtensionModel {
    BasisFrame frame = BasisFrame::identity(1);
    std::vector<LatticeVector> sample_points;
    std::vector<LatticeVector> sample_values;
    Vec k;
    double alpha = 0.0;
    NormKind norm = NormKind::euclidean;

    int dimension() const { return frame.dimension(); }
    std::size_t size() const { return sample_points.size(); }
};

/// Smallest per-coordinate constants certifying the sample set:
///   k(w) = max over pairs x != z of |values diff|(w) / blend_w(x, z).
/// For alpha = 0 a pair sharing a w-coordinate but differing in value
/// makes k(w) infinite; that is a NumericalError naming w. Exact pairwise
/// maximum, O(|S|^2 n).
Vec estimate_lipschitz_constants(const std::vector<LatticeVector>& points,
                                 const std::vector<LatticeVector>& values,
                                 double alpha);

/// Builds a model from ambient sample points: transforms points and
/// operator values into frame coordinates, drops exact duplicates
/// (identical coordinates with identical values), and estimates the
/// constants. Duplicate coordinates with differing values are rejected:
/// such data is not a function graph.
ExtensionModel build_model(BasisFrame frame, const std::vector<Point>& points,
                           const OperatorHandle& T, double alpha);

/// Builds a model with externally supplied constants. The certified
/// inequality is re-verified over all sample pairs (slack 1e-9, needed
/// because estimated constants are tight at their argmax pair); a
/// violation is a NumericalError.
ExtensionModel build_model_with_constants(BasisFrame frame,
                                          std::vector<LatticeVector> points,
                                          std::vector<LatticeVector> values,
                                          Vec k, double alpha);

LatticeVector mcshane(const ExtensionModel& model, const LatticeVector& x);
LatticeVector whitney(const ExtensionModel& model, const LatticeVector& x);

/// Coordinate-wise midpoint (mcshane + whitney) / 2.
LatticeVector interpolate(const ExtensionModel& model, const LatticeVector& x);

/// Pointwise certificate: bound(x)(w) = 2 k(w) * min_z blend_w(x, z).
/// When the certified inequality holds between x and every sample,
/// mcshane(x) lies in [T(x) - bound, T(x)] and whitney(x) in
/// [T(x), T(x) + bound], so |interpolate(x) - T(x)| <= bound.
LatticeVector error_bound(const ExtensionModel& model, const LatticeVector& x);

/// Full-pipeline evaluation in ambient coordinates:
/// from_coords(interpolate(to_coords(p))).
Point evaluate_ambient(const ExtensionModel& model, const Point& p);

}  // namespace latlip
