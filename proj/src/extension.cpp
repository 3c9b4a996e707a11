#include "latlip/extension.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace latlip {

namespace {

constexpr double kCertificationSlack = 1e-9;

void check_query(const ExtensionModel& model, const LatticeVector& x) {
    if (x.size() != model.dimension())
        throw std::invalid_argument("extension: query dimension mismatch");
    if (model.sample_points.empty())
        throw std::invalid_argument("extension: model has no samples");
}

void verify_certified(const std::vector<LatticeVector>& points,
                      const std::vector<LatticeVector>& values, const Vec& k,
                      double alpha) {
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Vec diff = points[i] - points[j];
            const double norm = diff.norm();
            for (Eigen::Index w = 0; w < k.size(); ++w) {
                const double blend = (1.0 - alpha) * std::abs(diff[w]) + alpha * norm;
                const double num = std::abs(values[i][w] - values[j][w]);
                if (num > k[w] * blend + kCertificationSlack)
                    throw NumericalError(
                        "extension model: certified inequality violated at coordinate " +
                        std::to_string(w));
            }
        }
    }
}

}  // namespace

Vec estimate_lipschitz_constants(const std::vector<LatticeVector>& points,
                                 const std::vector<LatticeVector>& values,
                                 double alpha) {
    if (points.size() != values.size())
        throw std::invalid_argument("estimate_lipschitz_constants: size mismatch");
    if (points.size() < 2)
        throw std::invalid_argument("estimate_lipschitz_constants: need >= 2 samples");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("estimate_lipschitz_constants: alpha outside [0,1]");

    const Eigen::Index dim = points.front().size();
    Vec k = Vec::Zero(dim);
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Vec diff = points[i] - points[j];
            const double norm = diff.norm();
            if (norm == 0.0) continue;  // duplicates handled at model build
            for (Eigen::Index w = 0; w < dim; ++w) {
                const double num = std::abs(values[i][w] - values[j][w]);
                const double blend = (1.0 - alpha) * std::abs(diff[w]) + alpha * norm;
                if (blend == 0.0) {
                    if (num > 0.0)
                        throw NumericalError(
                            "estimate_lipschitz_constants: unbounded constant at coordinate " +
                            std::to_string(w) +
                            " (coincident coordinate with differing values at alpha = 0)");
                    continue;
                }
                k[w] = std::max(k[w], num / blend);
            }
        }
    }
    return k;
}

namespace {

ExtensionModel assemble(BasisFrame frame, std::vector<LatticeVector> points,
                        std::vector<LatticeVector> values, Vec k, double alpha,
                        bool verify) {
    if (points.empty()) throw std::invalid_argument("extension model: no samples");
    if (points.size() != values.size())
        throw std::invalid_argument("extension model: points/values size mismatch");
    if (k.size() != frame.dimension())
        throw std::invalid_argument("extension model: constants dimension mismatch");
    for (Eigen::Index w = 0; w < k.size(); ++w)
        if (!(k[w] >= 0.0) || !std::isfinite(k[w]))
            throw std::invalid_argument("extension model: constants must be finite and >= 0");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("extension model: alpha outside [0,1]");

    if (verify) verify_certified(points, values, k, alpha);

    ExtensionModel model;
    model.frame = std::move(frame);
    model.sample_points = std::move(points);
    model.sample_values = std::move(values);
    model.k = std::move(k);
    model.alpha = alpha;
    return model;
}

// Drops exact duplicates; rejects identical coordinates with differing values.
void dedup(std::vector<LatticeVector>& points, std::vector<LatticeVector>& values) {
    std::vector<LatticeVector> up, uv;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool duplicate = false;
        for (std::size_t j = 0; j < up.size(); ++j) {
            if (up[j] == points[i]) {
                if (uv[j] != values[i])
                    throw std::invalid_argument(
                        "extension model: duplicate sample coordinates with differing values");
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            up.push_back(points[i]);
            uv.push_back(values[i]);
        }
    }
    points = std::move(up);
    values = std::move(uv);
}

}  // namespace

ExtensionModel build_model(BasisFrame frame, const std::vector<Point>& points,
                           const OperatorHandle& T, double alpha) {
    if (T.dimension() != frame.dimension())
        throw std::invalid_argument("build_model: operator/frame dimension mismatch");
    std::vector<LatticeVector> zs, vs;
    zs.reserve(points.size());
    vs.reserve(points.size());
    for (const auto& p : points) {
        zs.push_back(frame.to_coords(p));
        vs.push_back(frame.to_coords(T(p)));
    }
    dedup(zs, vs);
    if (zs.size() < 2) throw std::invalid_argument("build_model: need >= 2 distinct samples");
    Vec k = estimate_lipschitz_constants(zs, vs, alpha);
    // Estimated constants certify by construction; no re-verification.
    return assemble(std::move(frame), std::move(zs), std::move(vs), std::move(k), alpha, false);
}

ExtensionModel build_model_with_constants(BasisFrame frame,
                                          std::vector<LatticeVector> points,
                                          std::vector<LatticeVector> values,
                                          Vec k, double alpha) {
    dedup(points, values);
    return assemble(std::move(frame), std::move(points), std::move(values), std::move(k),
                    alpha, true);
}

LatticeVector mcshane(const ExtensionModel& model, const LatticeVector& x) {
    check_query(model, x);
    Vec out = Vec::Constant(x.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < model.sample_points.size(); ++i) {
        const Vec diff = x - model.sample_points[i];
        const double norm = diff.norm();
        for (Eigen::Index w = 0; w < x.size(); ++w) {
            const double blend =
                (1.0 - model.alpha) * std::abs(diff[w]) + model.alpha * norm;
            out[w] = std::max(out[w], model.sample_values[i][w] - model.k[w] * blend);
        }
    }
    return out;
}

LatticeVector whitney(const ExtensionModel& model, const LatticeVector& x) {
    check_query(model, x);
    Vec out = Vec::Constant(x.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < model.sample_points.size(); ++i) {
        const Vec diff = x - model.sample_points[i];
        const double norm = diff.norm();
        for (Eigen::Index w = 0; w < x.size(); ++w) {
            const double blend =
                (1.0 - model.alpha) * std::abs(diff[w]) + model.alpha * norm;
            out[w] = std::min(out[w], model.sample_values[i][w] + model.k[w] * blend);
        }
    }
    return out;
}

LatticeVector interpolate(const ExtensionModel& model, const LatticeVector& x) {
    return 0.5 * (mcshane(model, x) + whitney(model, x));
}

LatticeVector error_bound(const ExtensionModel& model, const LatticeVector& x) {
    check_query(model, x);
    Vec closest = Vec::Constant(x.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < model.sample_points.size(); ++i) {
        const Vec diff = x - model.sample_points[i];
        const double norm = diff.norm();
        for (Eigen::Index w = 0; w < x.size(); ++w) {
            const double blend =
                (1.0 - model.alpha) * std::abs(diff[w]) + model.alpha * norm;
            closest[w] = std::min(closest[w], blend);
        }
    }
    return 2.0 * model.k.cwiseProduct(closest);
}

Point evaluate_ambient(const ExtensionModel& model, const Point& p) {
    return model.frame.from_coords(interpolate(model, model.frame.to_coords(p)));
}

}  // namespace latlip
