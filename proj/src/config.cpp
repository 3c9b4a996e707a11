#include "latlip/config.hpp"

#include "latlip/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace latlip {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config: key '" + key + "': invalid number '" + value + "'");
    return v;
}

long to_long(const std::string& key, const std::string& value) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config: key '" + key + "': invalid integer '" + value + "'");
    return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config: key '" + key + "': invalid unsigned integer '" + value + "'");
    return v;
}

// "1 1; 1 -1" -> list of vectors.
std::vector<Vec> to_vector_list(const std::string& key, const std::string& value) {
    std::vector<Vec> out;
    std::istringstream groups(value);
    std::string group;
    while (std::getline(groups, group, ';')) {
        group = trim(group);
        if (group.empty()) continue;
        std::vector<double> entries;
        std::istringstream ss(group);
        std::string token;
        while (ss >> token) entries.push_back(to_double(key, token));
        if (entries.empty()) throw ConfigError("config: key '" + key + "': empty vector");
        Vec v(static_cast<Eigen::Index>(entries.size()));
        for (std::size_t i = 0; i < entries.size(); ++i)
            v[static_cast<Eigen::Index>(i)] = entries[i];
        out.push_back(std::move(v));
    }
    return out;
}

std::string vector_list_to_string(const std::vector<Vec>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) out += "; ";
        for (Eigen::Index j = 0; j < list[i].size(); ++j) {
            if (j > 0) out += " ";
            out += io::format_double(list[i][j]);
        }
    }
    return out;
}

bool vector_lists_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].size() != b[i].size() || a[i] != b[i]) return false;
    return true;
}

}  // namespace

void RunConfig::validate() const {
    if (operator_key != "S" && operator_key != "G" && operator_key != "R" &&
        operator_key != "f5")
        throw ConfigError("config: unknown operator key '" + operator_key + "'");
    if (r_set && operator_key != "R")
        throw ConfigError("config: parameter 'r' is only valid for operator R");
    if (n <= 0 || n0 <= 0 || n0 > n)
        throw ConfigError("config: need 0 < n0 <= n");
    if (n1 < 1) throw ConfigError("config: n1 must be >= 1");
    if (steps < 0) throw ConfigError("config: steps must be >= 0");
    if (!(tau > 0.0)) throw ConfigError("config: tau must be > 0");
    if (!(box_min <= box_max)) throw ConfigError("config: box_min must be <= box_max");
    if (distribution != "uniform")
        throw ConfigError("config: only the uniform sampling distribution is available");
    if (!(tol_angle > 0.0)) throw ConfigError("config: tol_angle must be > 0");
    if (alpha < 0.0 || alpha > 1.0) throw ConfigError("config: alpha must be in [0,1]");
    if (eval_grid < 2) throw ConfigError("config: grid must be >= 2");
    if (mc_points < 1) throw ConfigError("config: mc_points must be >= 1");
    if (audit_grid < 2) throw ConfigError("config: audit_grid must be >= 2");
    if (basis_mode == BasisSource::octant && sigmas.empty())
        throw ConfigError("config: octant basis mode requires 'sigmas'");
    if (basis_mode == BasisSource::user && user_vectors.empty())
        throw ConfigError("config: user basis mode requires 'vectors'");
    if (basis_mode != BasisSource::octant && !sigmas.empty())
        throw ConfigError("config: 'sigmas' is only valid for octant basis mode");
    if (basis_mode != BasisSource::user && !user_vectors.empty())
        throw ConfigError("config: 'vectors' is only valid for user basis mode");
}

OperatorHandle RunConfig::make_op() const {
    std::map<std::string, double> params;
    if (operator_key == "R") params["r"] = r;
    return make_operator(operator_key, params);
}

SearchConfig RunConfig::search_config(int dim) const {
    SearchConfig cfg;
    cfg.n = n;
    cfg.n0 = n0;
    cfg.n1 = n1;
    cfg.tau = tau;
    cfg.steps = steps;
    cfg.box = Box::cube(dim, box_min, box_max);
    cfg.rng_seed = seed;
    cfg.variance_mode = variance_mode;
    return cfg;
}

bool RunConfig::operator==(const RunConfig& other) const {
    return operator_key == other.operator_key && r == other.r && r_set == other.r_set &&
           n == other.n && n0 == other.n0 && n1 == other.n1 && tau == other.tau &&
           steps == other.steps && box_min == other.box_min && box_max == other.box_max &&
           seed == other.seed && variance_mode == other.variance_mode &&
           distribution == other.distribution && basis_mode == other.basis_mode &&
           center == other.center && tol_angle == other.tol_angle &&
           vector_lists_equal(sigmas, other.sigmas) &&
           vector_lists_equal(user_vectors, other.user_vectors) && alpha == other.alpha &&
           eval_grid == other.eval_grid && mc_points == other.mc_points &&
           audit_grid == other.audit_grid;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream ss(text);
    std::string line, section;
    int line_no = 0;

    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(line_no) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "operator" && section != "search" && section != "basis" &&
                section != "extension" && section != "evaluate" && section != "benchmark")
                throw ConfigError("config: unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        auto unknown = [&]() -> ConfigError {
            return ConfigError("config: unknown key '" + key + "' in section [" + section + "]");
        };

        if (section == "operator") {
            if (key == "key") cfg.operator_key = value;
            else if (key == "r") { cfg.r = to_double(key, value); cfg.r_set = true; }
            else throw unknown();
        } else if (section == "search") {
            if (key == "n") cfg.n = static_cast<int>(to_long(key, value));
            else if (key == "n0") cfg.n0 = static_cast<int>(to_long(key, value));
            else if (key == "n1") cfg.n1 = static_cast<int>(to_long(key, value));
            else if (key == "tau") cfg.tau = to_double(key, value);
            else if (key == "steps") cfg.steps = static_cast<int>(to_long(key, value));
            else if (key == "box_min") cfg.box_min = to_double(key, value);
            else if (key == "box_max") cfg.box_max = to_double(key, value);
            else if (key == "seed") cfg.seed = to_u64(key, value);
            else if (key == "variance_mode") {
                if (value == "code") cfg.variance_mode = VarianceMode::code;
                else if (value == "density") cfg.variance_mode = VarianceMode::density;
                else throw ConfigError("config: variance_mode must be 'code' or 'density'");
            } else if (key == "distribution") cfg.distribution = value;
            else throw unknown();
        } else if (section == "basis") {
            if (key == "mode") {
                try {
                    cfg.basis_mode = basis_source_from_string(value);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(std::string("config: ") + e.what());
                }
            } else if (key == "center") {
                if (value == "mean") cfg.center = PcaOptions::Center::mean;
                else if (value == "origin") cfg.center = PcaOptions::Center::origin;
                else throw ConfigError("config: center must be 'mean' or 'origin'");
            } else if (key == "tol_angle") cfg.tol_angle = to_double(key, value);
            else if (key == "sigmas") cfg.sigmas = to_vector_list(key, value);
            else if (key == "vectors") cfg.user_vectors = to_vector_list(key, value);
            else throw unknown();
        } else if (section == "extension") {
            if (key == "alpha") cfg.alpha = to_double(key, value);
            else throw unknown();
        } else if (section == "evaluate") {
            if (key == "grid") cfg.eval_grid = static_cast<int>(to_long(key, value));
            else throw unknown();
        } else if (section == "benchmark") {
            if (key == "mc_points") cfg.mc_points = to_long(key, value);
            else if (key == "audit_grid") cfg.audit_grid = static_cast<int>(to_long(key, value));
            else throw unknown();
        } else {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": key '" + key + "' before any section");
        }
    }

    if (cfg.operator_key == "R") cfg.r_set = true;  // r always effective for R
    cfg.validate();
    return cfg;
}

std::string write_config(const RunConfig& cfg) {
    std::string out;
    out += "[operator]\n";
    out += "key = " + cfg.operator_key + "\n";
    if (cfg.operator_key == "R") out += "r = " + io::format_double(cfg.r) + "\n";
    out += "\n[search]\n";
    out += "n = " + std::to_string(cfg.n) + "\n";
    out += "n0 = " + std::to_string(cfg.n0) + "\n";
    out += "n1 = " + std::to_string(cfg.n1) + "\n";
    out += "tau = " + io::format_double(cfg.tau) + "\n";
    out += "steps = " + std::to_string(cfg.steps) + "\n";
    out += "box_min = " + io::format_double(cfg.box_min) + "\n";
    out += "box_max = " + io::format_double(cfg.box_max) + "\n";
    out += "seed = " + std::to_string(cfg.seed) + "\n";
    out += std::string("variance_mode = ") +
           (cfg.variance_mode == VarianceMode::code ? "code" : "density") + "\n";
    out += "distribution = " + cfg.distribution + "\n";
    out += "\n[basis]\n";
    out += "mode = " + to_string(cfg.basis_mode) + "\n";
    out += std::string("center = ") +
           (cfg.center == PcaOptions::Center::mean ? "mean" : "origin") + "\n";
    out += "tol_angle = " + io::format_double(cfg.tol_angle) + "\n";
    if (!cfg.sigmas.empty()) out += "sigmas = " + vector_list_to_string(cfg.sigmas) + "\n";
    if (!cfg.user_vectors.empty())
        out += "vectors = " + vector_list_to_string(cfg.user_vectors) + "\n";
    out += "\n[extension]\n";
    out += "alpha = " + io::format_double(cfg.alpha) + "\n";
    out += "\n[evaluate]\n";
    out += "grid = " + std::to_string(cfg.eval_grid) + "\n";
    out += "\n[benchmark]\n";
    out += "mc_points = " + std::to_string(cfg.mc_points) + "\n";
    out += "audit_grid = " + std::to_string(cfg.audit_grid) + "\n";
    return out;
}

}  // namespace latlip
