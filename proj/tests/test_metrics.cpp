#include "latlip/metrics.hpp"

#include "latlip/diagonal.hpp"
#include "latlip/pipeline.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace latlip;
using testutil::vec2;

namespace {

Vec vec1(double a) {
    Vec v(1);
    v << a;
    return v;
}

OperatorHandle identity_1d() {
    return OperatorHandle(1, [](const Vec& x) { return x; }, Box::cube(1, 0.0, 1.0));
}

// Model of the 1-D identity from samples at a fixed mesh on [0,1]; the
// extensions reproduce the identity exactly between samples.
ExtensionModel identity_line_model(double mesh) {
    std::vector<LatticeVector> zs, vs;
    const long steps = std::lround(1.0 / mesh);
    for (long i = 0; i <= steps; ++i) {
        zs.push_back(vec1(mesh * static_cast<double>(i)));
        vs.push_back(zs.back());
    }
    return build_model_with_constants(BasisFrame::identity(1), std::move(zs), std::move(vs),
                                      vec1(1.0), 0.0);
}

ExtensionModel stock_model(std::uint64_t seed, double alpha) {
    const auto f = catalog_f5();
    SearchConfig cfg;
    cfg.rng_seed = seed;
    const EigenCloud cloud = run_search(f, cfg);
    std::vector<Point> points;
    for (const auto& s : cloud.samples) points.push_back(s.point);
    return build_model(pca_basis(cloud), points, f, alpha);
}

}  // namespace

TEST_CASE("exact model has zero error and zero violations") {
    const auto op = identity_1d();
    const auto model = identity_line_model(0.5);
    const auto report = mc_l2_error(op, model, op.domain_box(), 2000, 5);
    CHECK(report.l2_normalized == 0.0);
    CHECK(report.max_pointwise.maxCoeff() == 0.0);
    CHECK(report.bound_violations == 0);
    CHECK(bound_audit(op, model, op.domain_box(), 101) == 0);
}

TEST_CASE("dense sampling drives the normalized error below the mesh bound") {
    const auto op = identity_1d();
    const double mesh = 0.01;
    const auto model = identity_line_model(mesh);
    const auto report = mc_l2_error(op, model, op.domain_box(), 4000, 7);
    // bound: 2 * K * mesh * sqrt(n / vol)
    CHECK(report.l2_normalized < 2.0 * 1.0 * mesh);
}

TEST_CASE("monte carlo estimate is deterministic in the seed") {
    const auto model = stock_model(3, 0.1);
    const auto op = catalog_f5();
    const auto a = mc_l2_error(op, model, op.domain_box(), 3000, 11);
    const auto b = mc_l2_error(op, model, op.domain_box(), 3000, 11);
    CHECK(a.l2_normalized == b.l2_normalized);
    CHECK(a.mean_sq == b.mean_sq);
    CHECK(a.max_pointwise == b.max_pointwise);
    CHECK(a.bound_violations == b.bound_violations);

    const auto c = mc_l2_error(op, model, op.domain_box(), 3000, 12);
    CHECK(a.l2_normalized != c.l2_normalized);
}

TEST_CASE("doubling the sample agrees within statistical error") {
    const auto model = stock_model(5, 0.1);
    const auto op = catalog_f5();
    const Box box = op.domain_box();
    const auto a = mc_l2_error(op, model, box, 4000, 21);
    const auto b = mc_l2_error(op, model, box, 8000, 22);

    const double vol = box.volume();
    auto se_of = [vol](const ErrorReport& r) {
        // delta method through e = sqrt(vol * mean) / vol
        return r.mean_sq > 0.0 ? vol * r.mean_sq_se / (2.0 * std::sqrt(vol * r.mean_sq) * vol)
                               : 0.0;
    };
    CHECK(std::abs(a.l2_normalized - b.l2_normalized) <= 3.0 * (se_of(a) + se_of(b)));
}

TEST_CASE("stock model error report is populated") {
    const auto model = stock_model(1, 0.1);
    const auto op = catalog_f5();
    const auto report = mc_l2_error(op, model, op.domain_box(), 2000, 1);
    CHECK(report.l2_normalized > 0.0);
    CHECK(report.mc_points == 2000);
    CHECK(report.max_pointwise.size() == 2);
    CHECK(report.max_pointwise.minCoeff() > 0.0);
    CHECK(report.bound_violations >= 0);
    const long audit = bound_audit(op, model, op.domain_box(), 21);
    INFO("audit violations on a 21x21 lattice: ", audit);
    CHECK(audit >= 0);
}

TEST_CASE("cloud quality statistics") {
    const auto S = catalog_S();
    EigenCloud on_rays;
    for (int k = 1; k <= 10; ++k) {
        on_rays.samples.push_back(annotate(S, vec2(0.05 * k, 0.05 * k)));
        on_rays.samples.push_back(annotate(S, vec2(-0.08 * k, 0.08 * k)));
    }
    const std::vector<Vec> rays = {vec2(1, 1), vec2(1, -1)};
    const CloudStats with_ref = cloud_quality(on_rays, rays);
    CHECK(with_ref.has_reference);
    // acos near 1 resolves angles only to ~sqrt(eps)
    CHECK(with_ref.angle_max <= 1e-7);
    CHECK(with_ref.eps_max <= 1e-12);

    const CloudStats no_ref = cloud_quality(on_rays);
    CHECK_FALSE(no_ref.has_reference);
    CHECK(no_ref.count == on_rays.samples.size());
    CHECK(no_ref.eps_q25 <= no_ref.eps_median);
    CHECK(no_ref.eps_median <= no_ref.eps_q75);

    CHECK(cloud_quality(EigenCloud{}).count == 0);
}

TEST_CASE("refinement lowers the median error below the selection median") {
    const auto R0 = catalog_R(0.0);
    SearchConfig cfg;
    cfg.n = 500;
    cfg.n0 = 100;
    cfg.n1 = 10;
    cfg.tau = 5.0;
    cfg.steps = 10;
    cfg.box = Box::cube(2, -5.0, 5.0);
    cfg.rng_seed = 42;

    const EigenCloud selected = select_best(seed_uniform(R0, cfg), cfg.n0);
    const EigenCloud refined = run_search(R0, cfg);
    const double before = cloud_quality(selected).eps_median;
    const double after = cloud_quality(refined).eps_median;
    INFO("median: ", before, " -> ", after);
    CHECK(after < before);
}
