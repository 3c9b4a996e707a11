#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace latlip {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Same representation, different coordinate systems: a Point lives in the
// ambient (canonical) coordinates, a LatticeVector in the coordinates of a
// chosen BasisFrame.
using Point = Vec;
using LatticeVector = Vec;

/// Numerical failure that invalidates a run (unbounded constant,
/// degenerate cloud, negative radicand beyond tolerance).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration or malformed input file.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Axis-aligned box [lo_1,hi_1] x ... x [lo_n,hi_n].
class Box {
public:
    Box() = default;

    Box(Vec lo, Vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.size() != hi_.size())
            throw std::invalid_argument("Box: lo/hi dimension mismatch");
        for (Eigen::Index i = 0; i < lo_.size(); ++i)
            if (!(lo_[i] <= hi_[i]))
                throw std::invalid_argument("Box: lo > hi on axis " + std::to_string(i));
    }

    static Box cube(int dim, double lo, double hi) {
        return Box(Vec::Constant(dim, lo), Vec::Constant(dim, hi));
    }

    int dimension() const { return static_cast<int>(lo_.size()); }
    const Vec& lo() const { return lo_; }
    const Vec& hi() const { return hi_; }

    double volume() const {
        double v = 1.0;
        for (Eigen::Index i = 0; i < lo_.size(); ++i) v *= hi_[i] - lo_[i];
        return v;
    }

    bool contains(const Vec& p, double tol = 0.0) const {
        if (p.size() != lo_.size()) return false;
        for (Eigen::Index i = 0; i < lo_.size(); ++i)
            if (p[i] < lo_[i] - tol || p[i] > hi_[i] + tol) return false;
        return true;
    }

    /// Coordinate-wise projection onto the box.
    Vec clamp(Vec p) const {
        for (Eigen::Index i = 0; i < lo_.size(); ++i)
            p[i] = std::min(std::max(p[i], lo_[i]), hi_[i]);
        return p;
    }

private:
    Vec lo_, hi_;
};

}  // namespace latlip
