#include "latlip/pipeline.hpp"

#include "latlip/io.hpp"

namespace latlip {

namespace {

namespace fs = std::filesystem;

void prepare(const RunConfig& cfg, const fs::path& outdir) {
    cfg.validate();
    fs::create_directories(outdir);
    io::write_file(outdir / "effective.cfg", write_config(cfg));
}

}  // namespace

namespace {

// Known eigenray directions, when the catalog carries them, feed the
// angular-distance statistics of the cloud summary.
std::vector<Vec> reference_rays(const OperatorHandle& op) {
    std::vector<Vec> rays;
    for (const auto& ray : op.known_eigenrays()) rays.push_back(ray.direction);
    return rays;
}

}  // namespace

BasisFrame choose_frame(const RunConfig& cfg, const EigenCloud& cloud) {
    PcaOptions opts;
    opts.center = cfg.center;
    switch (cfg.basis_mode) {
        case BasisSource::direct: {
            if (auto frame = direct_basis(cloud, cfg.tol_angle)) return *frame;
            return pca_basis(cloud, opts);  // fallback when not applicable
        }
        case BasisSource::pca:
            return pca_basis(cloud, opts);
        case BasisSource::octant:
            return octant_basis(pca_basis(cloud, opts), cfg.sigmas);
        case BasisSource::user: {
            const auto n = static_cast<Eigen::Index>(cfg.user_vectors.size());
            Mat columns(n, n);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (cfg.user_vectors[static_cast<std::size_t>(j)].size() != n)
                    throw ConfigError("config: user basis vectors must form a square matrix");
                columns.col(j) = cfg.user_vectors[static_cast<std::size_t>(j)];
            }
            return BasisFrame::from_columns(columns, BasisSource::user);
        }
    }
    throw ConfigError("config: unknown basis mode");
}

void cmd_eigensearch(const RunConfig& cfg, const fs::path& outdir) {
    prepare(cfg, outdir);
    const OperatorHandle op = cfg.make_op();
    const EigenCloud cloud = run_search(op, cfg.search_config(op.dimension()));
    io::write_file(outdir / "cloud.csv", io::cloud_csv(cloud));
    io::write_file(outdir / "history.csv", io::history_csv(cloud));
    io::write_file(outdir / "summary.json", io::cloud_stats_json(cloud_quality(cloud, reference_rays(op))));
}

ExtensionModel cmd_fit(const RunConfig& cfg, const fs::path& cloud_csv,
                       const fs::path& outdir) {
    prepare(cfg, outdir);
    const OperatorHandle op = cfg.make_op();
    EigenCloud cloud = io::read_cloud_csv(io::read_file(cloud_csv));
    cloud.config = cfg.search_config(op.dimension());

    const BasisFrame frame = choose_frame(cfg, cloud);
    std::vector<Point> points;
    points.reserve(cloud.samples.size());
    for (const auto& s : cloud.samples) points.push_back(s.point);

    ExtensionModel model = build_model(frame, points, op, cfg.alpha);
    io::write_file(outdir / "model.json", io::model_json(model));
    return model;
}

void cmd_evaluate(const RunConfig& cfg, const fs::path& model_json, const fs::path& outdir) {
    prepare(cfg, outdir);
    const ExtensionModel model = io::read_model_json(io::read_file(model_json));
    const Box box = Box::cube(model.dimension(), cfg.box_min, cfg.box_max);
    io::write_file(outdir / "grid.csv", io::grid_csv(model, box, cfg.eval_grid));
}

ErrorReport cmd_benchmark(const RunConfig& cfg, const fs::path& outdir) {
    prepare(cfg, outdir);
    const OperatorHandle op = cfg.make_op();
    const Box box = Box::cube(op.dimension(), cfg.box_min, cfg.box_max);

    const EigenCloud cloud = run_search(op, cfg.search_config(op.dimension()));
    io::write_file(outdir / "cloud.csv", io::cloud_csv(cloud));
    io::write_file(outdir / "history.csv", io::history_csv(cloud));
    io::write_file(outdir / "summary.json", io::cloud_stats_json(cloud_quality(cloud, reference_rays(op))));

    const BasisFrame frame = choose_frame(cfg, cloud);
    std::vector<Point> points;
    points.reserve(cloud.samples.size());
    for (const auto& s : cloud.samples) points.push_back(s.point);
    const ExtensionModel model = build_model(frame, points, op, cfg.alpha);
    io::write_file(outdir / "model.json", io::model_json(model));

    const ErrorReport report = mc_l2_error(op, model, box, cfg.mc_points, cfg.seed);
    const long audit = bound_audit(op, model, box, cfg.audit_grid);
    io::write_file(outdir / "report.json", io::report_json(report, model, audit, cfg.audit_grid));
    io::write_file(outdir / "report.csv", io::report_csv(report, model, audit, cfg.audit_grid));
    return report;
}

}  // namespace latlip
