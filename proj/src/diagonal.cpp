#include "latlip/diagonal.hpp"

#include <cmath>

namespace latlip {

double diagonal_value(const OperatorHandle& T, const Vec& x) {
    const double nx2 = x.squaredNorm();
    if (nx2 == 0.0) return 0.0;
    return T(x).dot(x) / nx2;
}

double diagonal_error(const OperatorHandle& T, const Vec& x) {
    const double nx2 = x.squaredNorm();
    if (nx2 == 0.0) return 0.0;
    const Vec tx = T(x);
    const double lambda = tx.dot(x) / nx2;
    const double radicand = tx.squaredNorm() / nx2 - lambda * lambda;
    if (radicand < -1e-12)
        throw NumericalError("diagonal_error: radicand " + std::to_string(radicand) +
                             " below tolerance");
    return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

double projection_error_at(const OperatorHandle& T, const Vec& x, double alpha) {
    const double nx = x.norm();
    if (nx == 0.0)
        throw std::invalid_argument("projection_error_at: x must be nonzero");
    return (T(x) - alpha * x).norm() / nx;
}

EigenSample annotate(const OperatorHandle& T, Vec x) {
    EigenSample s;
    s.lambda = diagonal_value(T, x);
    s.error = diagonal_error(T, x);
    s.point = std::move(x);
    return s;
}

}  // namespace latlip
