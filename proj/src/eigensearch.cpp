#include "latlip/eigensearch.hpp"

#include "latlip/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace latlip {

namespace {

constexpr std::uint64_t kSeedStream = 0;
constexpr std::uint64_t kRefineStreamBase = 1;

void append_history(EigenCloud& cloud) {
    std::vector<double> errors;
    errors.reserve(cloud.samples.size());
    for (const auto& s : cloud.samples) errors.push_back(s.error);
    cloud.mean_error_history.push_back(
        errors.empty() ? 0.0
                       : std::accumulate(errors.begin(), errors.end(), 0.0) /
                             static_cast<double>(errors.size()));
    cloud.survivor_error_trace.push_back(std::move(errors));
}

}  // namespace

void SearchConfig::validate() const {
    if (n <= 0) throw std::invalid_argument("SearchConfig: n must be positive");
    if (n0 <= 0 || n0 > n) throw std::invalid_argument("SearchConfig: need 0 < n0 <= n");
    if (n1 < 1) throw std::invalid_argument("SearchConfig: n1 must be >= 1");
    if (steps < 0) throw std::invalid_argument("SearchConfig: steps must be >= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("SearchConfig: tau must be > 0");
    if (box.dimension() == 0) throw std::invalid_argument("SearchConfig: empty box");
}

double EigenCloud::mean_error() const {
    if (samples.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& s : samples) sum += s.error;
    return sum / static_cast<double>(samples.size());
}

EigenCloud seed_uniform(const OperatorHandle& T, const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.box.dimension() != T.dimension())
        throw std::invalid_argument("seed_uniform: box/operator dimension mismatch");

    EigenCloud cloud;
    cloud.config = cfg;
    cloud.samples.reserve(cfg.n);
    const int dim = cfg.box.dimension();
    for (int i = 0; i < cfg.n; ++i) {
        Rng rng = Rng::substream(cfg.rng_seed, kSeedStream, static_cast<std::uint64_t>(i));
        Vec p(dim);
        for (int j = 0; j < dim; ++j) p[j] = rng.uniform(cfg.box.lo()[j], cfg.box.hi()[j]);
        cloud.samples.push_back(annotate(T, std::move(p)));
    }
    std::stable_sort(cloud.samples.begin(), cloud.samples.end(),
                     [](const EigenSample& a, const EigenSample& b) { return a.error < b.error; });
    return cloud;
}

EigenCloud select_best(EigenCloud cloud, int n0) {
    if (n0 <= 0 || static_cast<std::size_t>(n0) > cloud.samples.size())
        throw std::invalid_argument("select_best: need 0 < n0 <= cloud size");
    std::stable_sort(cloud.samples.begin(), cloud.samples.end(),
                     [](const EigenSample& a, const EigenSample& b) { return a.error < b.error; });
    cloud.samples.resize(n0);
    cloud.mean_error_history.clear();
    cloud.survivor_error_trace.clear();
    append_history(cloud);
    return cloud;
}

EigenCloud refine_step(const OperatorHandle& T, EigenCloud cloud, const SearchConfig& cfg) {
    cfg.validate();
    if (cloud.samples.empty())
        throw std::invalid_argument("refine_step: empty cloud");
    if (cloud.mean_error_history.empty()) append_history(cloud);

    const std::uint64_t step = cloud.mean_error_history.size() - 1;
    const int dim = cfg.box.dimension();

    for (std::size_t i = 0; i < cloud.samples.size(); ++i) {
        Rng rng = Rng::substream(cfg.rng_seed, kRefineStreamBase + step, i);
        EigenSample best = cloud.samples[i];
        const double sd = cfg.variance_mode == VarianceMode::code
                              ? cfg.tau * best.error
                              : std::sqrt(cfg.tau * best.error / 2.0);
        for (int k = 0; k < cfg.n1; ++k) {
            Vec p(dim);
            for (int j = 0; j < dim; ++j)
                p[j] = cloud.samples[i].point[j] + sd * rng.gaussian();
            EigenSample cand = annotate(T, cfg.box.clamp(std::move(p)));
            if (cand.error < best.error) best = std::move(cand);
        }
        cloud.samples[i] = std::move(best);
    }
    append_history(cloud);
    return cloud;
}

EigenCloud run_search(const OperatorHandle& T, const SearchConfig& cfg) {
    cfg.validate();
    EigenCloud cloud = select_best(seed_uniform(T, cfg), cfg.n0);
    for (int s = 0; s < cfg.steps; ++s) cloud = refine_step(T, std::move(cloud), cfg);
    return cloud;
}

}  // namespace latlip
