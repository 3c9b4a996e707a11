#include "latlip/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace latlip::io {

namespace {

using nlohmann::json;

double parse_double(const std::string& token) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("invalid number '" + token + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream ss(line);
    while (std::getline(ss, token, sep)) out.push_back(token);
    return out;
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Vec vec_from_json(const json& arr) {
    if (!arr.is_array()) throw ConfigError("expected a JSON array of numbers");
    Vec v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    return v;
}

json frame_to_json(const BasisFrame& frame) {
    json vectors = json::array();
    for (int j = 0; j < frame.dimension(); ++j) vectors.push_back(vec_to_json(frame.column(j)));
    return json{{"vectors", vectors}, {"source", to_string(frame.source())}};
}

BasisFrame frame_from_json(const json& j) {
    if (!j.contains("vectors") || !j.contains("source"))
        throw ConfigError("frame JSON: missing 'vectors' or 'source'");
    const auto& vectors = j["vectors"];
    const auto n = static_cast<Eigen::Index>(vectors.size());
    if (n == 0) throw ConfigError("frame JSON: empty basis");
    Mat columns(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const Vec col = vec_from_json(vectors[static_cast<std::size_t>(c)]);
        if (col.size() != n) throw ConfigError("frame JSON: ragged basis vectors");
        columns.col(c) = col;
    }
    return BasisFrame::from_columns(columns, basis_source_from_string(j["source"].get<std::string>()));
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string cloud_csv(const EigenCloud& cloud) {
    std::string out;
    const int dim = cloud.samples.empty() ? cloud.config.box.dimension()
                                          : static_cast<int>(cloud.samples.front().point.size());
    for (int j = 0; j < dim; ++j) out += "x" + std::to_string(j + 1) + ",";
    out += "lambda,epsilon\n";
    for (const auto& s : cloud.samples) {
        for (Eigen::Index j = 0; j < s.point.size(); ++j) out += format_double(s.point[j]) + ",";
        out += format_double(s.lambda) + "," + format_double(s.error) + "\n";
    }
    return out;
}

EigenCloud read_cloud_csv(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw ConfigError("cloud CSV: empty file");
    const auto header = split(line, ',');
    if (header.size() < 3 || header[header.size() - 2] != "lambda" ||
        header.back() != "epsilon")
        throw ConfigError("cloud CSV: expected header x1,...,xn,lambda,epsilon");
    const int dim = static_cast<int>(header.size()) - 2;

    EigenCloud cloud;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (static_cast<int>(fields.size()) != dim + 2)
            throw ConfigError("cloud CSV: wrong number of fields");
        EigenSample s;
        s.point = Vec(dim);
        for (int j = 0; j < dim; ++j) s.point[j] = parse_double(fields[j]);
        s.lambda = parse_double(fields[dim]);
        s.error = parse_double(fields[dim + 1]);
        cloud.samples.push_back(std::move(s));
    }
    if (cloud.samples.empty()) throw ConfigError("cloud CSV: no samples");
    return cloud;
}

std::string history_csv(const EigenCloud& cloud) {
    std::string out = "step,mean_epsilon\n";
    for (std::size_t k = 0; k < cloud.mean_error_history.size(); ++k)
        out += std::to_string(k) + "," + format_double(cloud.mean_error_history[k]) + "\n";
    return out;
}

std::string grid_csv(const ExtensionModel& model, const Box& box, int grid_per_axis) {
    if (grid_per_axis < 2) throw std::invalid_argument("grid_csv: need >= 2 points per axis");
    const int dim = box.dimension();
    if (dim != model.dimension())
        throw std::invalid_argument("grid_csv: box/model dimension mismatch");

    std::string out;
    for (int j = 0; j < dim; ++j) out += "x" + std::to_string(j + 1) + ",";
    for (int j = 0; j < dim; ++j) out += "fhat" + std::to_string(j + 1) + ",";
    for (int j = 0; j < dim; ++j)
        out += "bound" + std::to_string(j + 1) + (j + 1 < dim ? "," : "\n");

    long total = 1;
    for (int j = 0; j < dim; ++j) total *= grid_per_axis;
    for (long c = 0; c < total; ++c) {
        Vec p(dim);
        long rem = c;
        for (int j = 0; j < dim; ++j) {
            const int idx = static_cast<int>(rem % grid_per_axis);
            rem /= grid_per_axis;
            p[j] = box.lo()[j] + (box.hi()[j] - box.lo()[j]) * static_cast<double>(idx) /
                                     static_cast<double>(grid_per_axis - 1);
        }
        const LatticeVector x = model.frame.to_coords(p);
        const Vec fhat = model.frame.from_coords(interpolate(model, x));
        const Vec bound = error_bound(model, x);
        for (int j = 0; j < dim; ++j) out += format_double(p[j]) + ",";
        for (int j = 0; j < dim; ++j) out += format_double(fhat[j]) + ",";
        for (int j = 0; j < dim; ++j)
            out += format_double(bound[j]) + (j + 1 < dim ? "," : "\n");
    }
    return out;
}

std::string frame_json(const BasisFrame& frame) { return frame_to_json(frame).dump(2) + "\n"; }

BasisFrame read_frame_json(const std::string& text) {
    try {
        return frame_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("frame JSON: ") + e.what());
    }
}

std::string model_json(const ExtensionModel& model) {
    json samples = json::array();
    for (std::size_t i = 0; i < model.size(); ++i)
        samples.push_back(json{{"z", vec_to_json(model.sample_points[i])},
                               {"tz", vec_to_json(model.sample_values[i])}});
    json j{{"frame", frame_to_json(model.frame)},
           {"samples", samples},
           {"K", vec_to_json(model.k)},
           {"alpha", model.alpha},
           {"norm", "euclidean"}};
    return j.dump(2) + "\n";
}

ExtensionModel read_model_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("model JSON: ") + e.what());
    }
    for (const char* key : {"frame", "samples", "K", "alpha"})
        if (!j.contains(key)) throw ConfigError(std::string("model JSON: missing '") + key + "'");
    if (j.contains("norm") && j["norm"].get<std::string>() != "euclidean")
        throw ConfigError("model JSON: unsupported norm");

    BasisFrame frame = frame_from_json(j["frame"]);
    std::vector<LatticeVector> points, values;
    for (const auto& s : j["samples"]) {
        if (!s.contains("z") || !s.contains("tz"))
            throw ConfigError("model JSON: sample missing 'z' or 'tz'");
        points.push_back(vec_from_json(s["z"]));
        values.push_back(vec_from_json(s["tz"]));
    }
    // Re-verifies the certified inequality against the imported constants.
    return build_model_with_constants(std::move(frame), std::move(points), std::move(values),
                                      vec_from_json(j["K"]), j["alpha"].get<double>());
}

std::string report_json(const ErrorReport& report, const ExtensionModel& model,
                        long audit_violations, int audit_grid) {
    json j{{"l2_normalized", report.l2_normalized},
           {"max_pointwise", vec_to_json(report.max_pointwise)},
           {"bound_violations", report.bound_violations},
           {"mc_points", report.mc_points},
           {"rng_seed", report.rng_seed},
           {"mean_sq", report.mean_sq},
           {"mean_sq_se", report.mean_sq_se},
           {"K", vec_to_json(model.k)},
           {"alpha", model.alpha},
           {"audit_violations", audit_violations},
           {"audit_grid", audit_grid}};
    return j.dump(2) + "\n";
}

std::string report_csv(const ErrorReport& report, const ExtensionModel& model,
                       long audit_violations, int audit_grid) {
    std::string out = "metric,value\n";
    out += "l2_normalized," + format_double(report.l2_normalized) + "\n";
    out += "mean_sq," + format_double(report.mean_sq) + "\n";
    out += "mean_sq_se," + format_double(report.mean_sq_se) + "\n";
    for (Eigen::Index w = 0; w < report.max_pointwise.size(); ++w)
        out += "max_pointwise_" + std::to_string(w + 1) + "," +
               format_double(report.max_pointwise[w]) + "\n";
    out += "bound_violations," + std::to_string(report.bound_violations) + "\n";
    out += "mc_points," + std::to_string(report.mc_points) + "\n";
    out += "rng_seed," + std::to_string(report.rng_seed) + "\n";
    for (Eigen::Index w = 0; w < model.k.size(); ++w)
        out += "K_" + std::to_string(w + 1) + "," + format_double(model.k[w]) + "\n";
    out += "alpha," + format_double(model.alpha) + "\n";
    out += "audit_violations," + std::to_string(audit_violations) + "\n";
    out += "audit_grid," + std::to_string(audit_grid) + "\n";
    return out;
}

std::string cloud_stats_json(const CloudStats& stats) {
    json j{{"count", stats.count},
           {"eps_mean", stats.eps_mean},
           {"eps_median", stats.eps_median},
           {"eps_q25", stats.eps_q25},
           {"eps_q75", stats.eps_q75},
           {"eps_min", stats.eps_min},
           {"eps_max", stats.eps_max}};
    if (stats.has_reference) {
        j["angle_mean"] = stats.angle_mean;
        j["angle_median"] = stats.angle_median;
        j["angle_max"] = stats.angle_max;
    }
    return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace latlip::io
