#include "latlip/metrics.hpp"

#include "latlip/rng.hpp"

#include <algorithm>
#include <cmath>

namespace latlip {

namespace {

constexpr double kBoundSlack = 1e-9;
// Stream tag distinct from the search streams, so reusing one base seed
// across the pipeline never correlates the error estimate with the cloud.
constexpr std::uint64_t kMetricsStream = 0x4d43;

double quantile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

ErrorReport mc_l2_error(const OperatorHandle& T, const ExtensionModel& model,
                        const Box& box, long mc_points, std::uint64_t rng_seed) {
    if (mc_points < 1) throw std::invalid_argument("mc_l2_error: mc_points must be >= 1");

    const int dim = box.dimension();
    ErrorReport report;
    report.mc_points = mc_points;
    report.rng_seed = rng_seed;
    report.max_pointwise = Vec::Zero(model.dimension());

    double sum_sq = 0.0, sum_sq2 = 0.0;
    for (long i = 0; i < mc_points; ++i) {
        Rng rng = Rng::substream(rng_seed, kMetricsStream, static_cast<std::uint64_t>(i));
        Vec p(dim);
        for (int j = 0; j < dim; ++j) p[j] = rng.uniform(box.lo()[j], box.hi()[j]);

        const LatticeVector x = model.frame.to_coords(p);
        const LatticeVector fhat = interpolate(model, x);
        const LatticeVector truth = model.frame.to_coords(T(p));
        const LatticeVector bound = error_bound(model, x);

        const Vec diff_frame = (fhat - truth).cwiseAbs();
        bool violated = false;
        for (Eigen::Index w = 0; w < diff_frame.size(); ++w) {
            report.max_pointwise[w] = std::max(report.max_pointwise[w], diff_frame[w]);
            if (diff_frame[w] > bound[w] + kBoundSlack) violated = true;
        }
        if (violated) ++report.bound_violations;

        const double d2 =
            (model.frame.from_coords(fhat) - T(p)).squaredNorm();
        sum_sq += d2;
        sum_sq2 += d2 * d2;
    }

    const double n = static_cast<double>(mc_points);
    report.mean_sq = sum_sq / n;
    const double var = std::max(0.0, sum_sq2 / n - report.mean_sq * report.mean_sq);
    report.mean_sq_se = std::sqrt(var / n);

    const double vol = box.volume();
    report.l2_normalized = vol > 0.0 ? std::sqrt(vol * report.mean_sq) / vol : 0.0;
    return report;
}

long bound_audit(const OperatorHandle& T, const ExtensionModel& model, const Box& box,
                 int grid_per_axis) {
    if (grid_per_axis < 2) throw std::invalid_argument("bound_audit: need >= 2 points per axis");
    const int dim = box.dimension();

    long total = 1;
    for (int j = 0; j < dim; ++j) total *= grid_per_axis;

    long violations = 0;
    std::vector<int> idx(dim, 0);
    for (long c = 0; c < total; ++c) {
        Vec p(dim);
        long rem = c;
        for (int j = 0; j < dim; ++j) {
            idx[j] = static_cast<int>(rem % grid_per_axis);
            rem /= grid_per_axis;
            p[j] = box.lo()[j] + (box.hi()[j] - box.lo()[j]) *
                                     static_cast<double>(idx[j]) /
                                     static_cast<double>(grid_per_axis - 1);
        }
        const LatticeVector x = model.frame.to_coords(p);
        const Vec diff = (interpolate(model, x) - model.frame.to_coords(T(p))).cwiseAbs();
        const Vec bound = error_bound(model, x);
        for (Eigen::Index w = 0; w < diff.size(); ++w)
            if (diff[w] > bound[w] + kBoundSlack) ++violations;
    }
    return violations;
}

CloudStats cloud_quality(const EigenCloud& cloud, const std::vector<Vec>& reference_rays) {
    CloudStats stats;
    stats.count = cloud.samples.size();
    if (cloud.samples.empty()) return stats;

    std::vector<double> errors;
    errors.reserve(cloud.samples.size());
    for (const auto& s : cloud.samples) errors.push_back(s.error);
    std::sort(errors.begin(), errors.end());

    stats.eps_min = errors.front();
    stats.eps_max = errors.back();
    stats.eps_median = quantile(errors, 0.5);
    stats.eps_q25 = quantile(errors, 0.25);
    stats.eps_q75 = quantile(errors, 0.75);
    double sum = 0.0;
    for (double e : errors) sum += e;
    stats.eps_mean = sum / static_cast<double>(errors.size());

    if (reference_rays.empty()) return stats;

    std::vector<double> angles;
    for (const auto& s : cloud.samples) {
        const double norm = s.point.norm();
        if (norm == 0.0) continue;
        double best = 1e300;
        for (const auto& ray : reference_rays) {
            const double c =
                std::min(1.0, std::abs(s.point.dot(ray)) / (norm * ray.norm()));
            best = std::min(best, std::acos(c));
        }
        angles.push_back(best);
    }
    if (angles.empty()) return stats;

    std::sort(angles.begin(), angles.end());
    stats.has_reference = true;
    stats.angle_max = angles.back();
    stats.angle_median = quantile(angles, 0.5);
    double asum = 0.0;
    for (double a : angles) asum += a;
    stats.angle_mean = asum / static_cast<double>(angles.size());
    return stats;
}

}  // namespace latlip
