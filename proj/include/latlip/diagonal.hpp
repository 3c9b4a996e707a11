#pragma once

#include "latlip/operator.hpp"
#include "latlip/types.hpp"

namespace latlip {

/// A point annotated with its diagonal value and diagonal error.
struct EigenSample {
    Vec point;
    double lambda = 0.0;
    double error = 0.0;
};

/// Diagonal value <T(x), x> / ||x||^2: the scalar whose multiple of x best
/// approximates T(x). Returns 0 at the origin by convention, which keeps
/// the search total on any box containing 0.
double diagonal_value(const OperatorHandle& T, const Vec& x);

/// Minimal normalized residual sqrt(||T(x)||^2/||x||^2 - lambda(x)^2).
/// Zero exactly at eigenvectors and at the origin (convention). The
/// radicand is analytically nonnegative; cancellation near an exact
/// eigenvector may drive it slightly negative, so values down to -1e-12
/// are clamped to 0 and anything below that is a numerical failure.
double diagonal_error(const OperatorHandle& T, const Vec& x);

/// Normalized residual ||T(x) - alpha*x|| / ||x|| at a given alpha.
/// Rejects x = 0. Minimized over alpha at alpha = diagonal_value(T, x).
double projection_error_at(const OperatorHandle& T, const Vec& x, double alpha);

/// Evaluate diagonal value and error at x.
EigenSample annotate(const OperatorHandle& T, Vec x);

}  // namespace latlip
