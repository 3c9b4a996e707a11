#include "latlip/basisframe.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace latlip {

namespace {

// Flip so the largest-magnitude entry (first such index on ties) is positive.
Vec canonical_sign(Vec v) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            arg = i;
        }
    }
    if (v[arg] < 0.0) v = -v;
    return v;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string to_string(BasisSource source) {
    switch (source) {
        case BasisSource::direct: return "direct";
        case BasisSource::pca: return "pca";
        case BasisSource::octant: return "octant";
        case BasisSource::user: return "user";
    }
    return "user";
}

BasisSource basis_source_from_string(const std::string& name) {
    if (name == "direct") return BasisSource::direct;
    if (name == "pca") return BasisSource::pca;
    if (name == "octant") return BasisSource::octant;
    if (name == "user") return BasisSource::user;
    throw std::invalid_argument("unknown basis source '" + name + "'");
}

BasisFrame BasisFrame::from_columns(const Mat& columns, BasisSource source) {
    if (columns.rows() != columns.cols() || columns.rows() == 0)
        throw std::invalid_argument("BasisFrame: need a square nonempty matrix");
    double norm_product = 1.0;
    for (Eigen::Index j = 0; j < columns.cols(); ++j) norm_product *= columns.col(j).norm();
    Eigen::PartialPivLU<Mat> lu(columns);
    const double det = lu.determinant();
    if (!(std::abs(det) > 1e-10 * norm_product))
        throw std::invalid_argument("BasisFrame: columns are (nearly) dependent");
    return BasisFrame(columns, lu.inverse(), source);
}

BasisFrame BasisFrame::identity(int dim) {
    return BasisFrame(Mat::Identity(dim, dim), Mat::Identity(dim, dim), BasisSource::user);
}

BasisFrame pca_basis(const std::vector<Vec>& points, const PcaOptions& opts) {
    if (points.empty()) throw std::invalid_argument("pca_basis: empty cloud");
    const Eigen::Index dim = points.front().size();
    if (static_cast<Eigen::Index>(points.size()) < dim)
        throw std::invalid_argument("pca_basis: fewer points than dimensions");

    Vec center = Vec::Zero(dim);
    if (opts.center == PcaOptions::Center::mean) {
        for (const auto& p : points) center += p;
        center /= static_cast<double>(points.size());
    }

    Mat cov = Mat::Zero(dim, dim);
    for (const auto& p : points) {
        const Vec d = p - center;
        cov += d * d.transpose();
    }
    cov /= static_cast<double>(points.size() > 1 ? points.size() - 1 : 1);

    Eigen::SelfAdjointEigenSolver<Mat> solver(cov);
    if (solver.info() != Eigen::Success)
        throw NumericalError("pca_basis: eigendecomposition failed");

    const Vec eigenvalues = solver.eigenvalues();  // ascending
    const double largest = eigenvalues[dim - 1];
    if (!(eigenvalues[0] >= 1e-12 * largest) || !(largest > 0.0))
        throw NumericalError("pca_basis: degenerate cloud (rank-deficient covariance)");

    Mat columns(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        columns.col(j) = canonical_sign(solver.eigenvectors().col(dim - 1 - j));
    return BasisFrame::from_columns(columns, BasisSource::pca);
}

BasisFrame pca_basis(const EigenCloud& cloud, const PcaOptions& opts) {
    std::vector<Vec> points;
    points.reserve(cloud.samples.size());
    for (const auto& s : cloud.samples) points.push_back(s.point);
    return pca_basis(points, opts);
}

BasisFrame octant_basis(const BasisFrame& frame, const std::vector<Vec>& sigmas) {
    const int dim = frame.dimension();
    if (static_cast<int>(sigmas.size()) != dim)
        throw std::invalid_argument("octant_basis: need exactly n sign vectors");

    Mat sigma_matrix(dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (sigmas[j].size() != dim)
            throw std::invalid_argument("octant_basis: sign vector dimension mismatch");
        for (int i = 0; i < dim; ++i)
            if (std::abs(sigmas[j][i]) != 1.0)
                throw std::invalid_argument("octant_basis: entries must be +1 or -1");
        sigma_matrix.col(j) = sigmas[j];
    }
    if (std::abs(sigma_matrix.determinant()) < 0.5)
        throw std::invalid_argument("octant_basis: dependent sign vectors");

    const Mat columns = frame.columns() * sigma_matrix / std::sqrt(static_cast<double>(dim));
    return BasisFrame::from_columns(columns, BasisSource::octant);
}

std::optional<BasisFrame> direct_basis(const EigenCloud& cloud, double tol_angle) {
    std::vector<Vec> dirs;
    Eigen::Index dim = 0;
    for (const auto& s : cloud.samples) {
        const double norm = s.point.norm();
        if (norm == 0.0) continue;
        dim = s.point.size();
        dirs.push_back(canonical_sign(s.point / norm));
    }
    if (dirs.empty() || static_cast<Eigen::Index>(dirs.size()) < dim) return std::nullopt;

    const int m = static_cast<int>(dirs.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double c = std::min(1.0, std::abs(dirs[i].dot(dirs[j])));
            if (std::acos(c) <= tol_angle) uf.merge(i, j);
        }

    // Clusters in first-seen order.
    std::vector<int> roots;
    std::vector<std::vector<int>> members;
    for (int i = 0; i < m; ++i) {
        const int r = uf.find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            members.push_back({i});
        } else {
            members[static_cast<std::size_t>(it - roots.begin())].push_back(i);
        }
    }

    const double mass_floor = 0.05 * static_cast<double>(m);
    std::vector<std::size_t> significant;
    for (std::size_t c = 0; c < members.size(); ++c)
        if (static_cast<double>(members[c].size()) >= mass_floor) significant.push_back(c);
    if (static_cast<Eigen::Index>(significant.size()) != dim) return std::nullopt;

    // Largest clusters first; ties keep first-seen order.
    std::stable_sort(significant.begin(), significant.end(),
                     [&](std::size_t a, std::size_t b) {
                         return members[a].size() > members[b].size();
                     });

    // Cluster mean direction: principal axis of the direction scatter,
    // which is insensitive to the sign ambiguity of individual samples.
    Mat columns(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        Mat scatter = Mat::Zero(dim, dim);
        for (int idx : members[significant[static_cast<std::size_t>(j)]])
            scatter += dirs[idx] * dirs[idx].transpose();
        Eigen::SelfAdjointEigenSolver<Mat> solver(scatter);
        if (solver.info() != Eigen::Success) return std::nullopt;
        columns.col(j) = canonical_sign(solver.eigenvectors().col(dim - 1));
    }

    try {
        return BasisFrame::from_columns(columns, BasisSource::direct);
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // dependent cluster means
    }
}

namespace {

void check_same_size(const Vec& x, const Vec& y, const char* what) {
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

Vec lattice_abs(const Vec& x) { return x.cwiseAbs(); }

Vec lattice_sup(const Vec& x, const Vec& y) {
    check_same_size(x, y, "lattice_sup");
    return x.cwiseMax(y);
}

Vec lattice_inf(const Vec& x, const Vec& y) {
    check_same_size(x, y, "lattice_inf");
    return x.cwiseMin(y);
}

}  // namespace latlip
