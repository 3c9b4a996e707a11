#pragma once

#include "latlip/eigensearch.hpp"
#include "latlip/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latlip {

enum class BasisSource { direct, pca, octant, user };

std::string to_string(BasisSource source);
BasisSource basis_source_from_string(const std::string& name);

/// Ordered basis of R^n with precomputed forward/inverse coordinate
/// transforms. The basis induces the coordinate-wise (lattice) order used
/// by the extension formulas. Immutable after construction and shareable
/// across workers.
class BasisFrame {
public:
    /// Columns of `columns` are the basis vectors. Rejects nearly
    /// dependent columns (|det| <= 1e-10 * product of column norms).
    static BasisFrame from_columns(const Mat& columns, BasisSource source);
    static BasisFrame identity(int dim);

    int dimension() const { return static_cast<int>(columns_.cols()); }
    const Mat& columns() const { return columns_; }
    const Mat& inverse() const { return inverse_; }
    BasisSource source() const { return source_; }
    Vec column(int j) const { return columns_.col(j); }

    LatticeVector to_coords(const Point& p) const { return inverse_ * p; }
    Point from_coords(const LatticeVector& c) const { return columns_ * c; }

private:
    BasisFrame(Mat columns, Mat inverse, BasisSource source)
        : columns_(std::move(columns)), inverse_(std::move(inverse)), source_(source) {}

    Mat columns_;
    Mat inverse_;
    BasisSource source_;
};

struct PcaOptions {
    enum class Center { mean, origin };
    Center center = Center::mean;
};

/// Principal axes of the point cloud: unit eigenvectors of the covariance
/// matrix, ordered by non-increasing eigenvalue, sign fixed so the
/// largest-magnitude entry of each column is positive. Throws
/// NumericalError when the covariance is rank deficient (smallest
/// eigenvalue < 1e-12 * largest).
BasisFrame pca_basis(const std::vector<Vec>& points, const PcaOptions& opts = {});
BasisFrame pca_basis(const EigenCloud& cloud, const PcaOptions& opts = {});

/// Basis along the symmetry axes of the orthants of `frame`: the j-th
/// vector is frame * (sigma_j / sqrt(n)) for sign vectors sigma_j in
/// {-1,+1}^n. Rejects a dependent sigma set.
BasisFrame octant_basis(const BasisFrame& frame, const std::vector<Vec>& sigmas);

/// Clusters sample directions (a point and its negative are identified)
/// by single-link angular distance <= tol_angle. Returns the basis of
/// cluster mean directions when exactly n clusters hold at least 5% of
/// the directions each and those means are independent; otherwise empty.
std::optional<BasisFrame> direct_basis(const EigenCloud& cloud, double tol_angle);

// Lattice primitives in basis coordinates (coordinate-wise).
Vec lattice_abs(const Vec& x);
Vec lattice_sup(const Vec& x, const Vec& y);
Vec lattice_inf(const Vec& x, const Vec& y);

}  // namespace latlip
