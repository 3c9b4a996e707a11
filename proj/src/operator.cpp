#include "latlip/operator.hpp"

#include <cmath>
#include <utility>

namespace latlip {

OperatorHandle::OperatorHandle(int dimension,
                               std::function<Vec(const Vec&)> evaluate,
                               Box domain_box,
                               std::vector<EigenRay> known_eigenrays)
    : dimension_(dimension),
      evaluate_(std::move(evaluate)),
      domain_box_(std::move(domain_box)),
      known_eigenrays_(std::move(known_eigenrays)) {
    if (dimension_ <= 0)
        throw std::invalid_argument("OperatorHandle: dimension must be positive");
    if (domain_box_.dimension() != dimension_)
        throw std::invalid_argument("OperatorHandle: domain box dimension mismatch");
}

Vec OperatorHandle::operator()(const Vec& x) const {
    if (x.size() != dimension_)
        throw std::invalid_argument("OperatorHandle: input dimension mismatch");
    Vec y = evaluate_(x);
    if (y.size() != dimension_)
        throw std::invalid_argument("OperatorHandle: evaluation returned wrong dimension");
    return y;
}

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

}  // namespace

OperatorHandle catalog_S() {
    auto eval = [](const Vec& p) {
        const double x = p[0], y = p[1];
        return v2(x * x + y * y, 2.0 * x * y);
    };
    std::vector<EigenRay> rays;
    rays.push_back({v2(1.0, 0.0), [](double t) { return t; }});
    rays.push_back({v2(1.0, 1.0), [](double t) { return 2.0 * t; }});
    rays.push_back({v2(1.0, -1.0), [](double t) { return 2.0 * t; }});
    return OperatorHandle(2, eval, Box::cube(2, -1.0, 1.0), std::move(rays));
}

OperatorHandle catalog_G() {
    auto eval = [](const Vec& p) {
        const double x = p[0], y = p[1];
        const double g = std::abs(y) / (1.0 + std::abs(y));
        return v2(x - y + g, g);
    };
    std::vector<EigenRay> rays;
    rays.push_back({v2(1.0, 0.0), [](double) { return 1.0; }});
    rays.push_back({v2(1.0, 1.0), [](double t) {
                        return t == 0.0 ? 0.0 : std::abs(t) / (t * (1.0 + std::abs(t)));
                    }});
    return OperatorHandle(2, eval, Box::cube(2, -5.0, 5.0), std::move(rays));
}

OperatorHandle catalog_R(double r) {
    auto eval = [r](const Vec& p) {
        const double x = p[0], y = p[1];
        return v2(8.0 * x + r * std::sin(5.0 * x * y),
                  4.0 * x * x + 4.0 * x * y + y * y - 2.0 * x -
                      std::sqrt(std::abs(x + y)) / 5.0);
    };
    return OperatorHandle(2, eval, Box::cube(2, -5.0, 5.0));
}

OperatorHandle catalog_f5() {
    auto eval = [](const Vec& p) {
        const double x = p[0], y = p[1];
        return v2(x + y + std::sin(10.0 * x) / 5.0 + x * y / 100.0,
                  x - y - std::cos(x + 5.0 * y) / 10.0);
    };
    return OperatorHandle(2, eval, Box::cube(2, -5.0, 5.0));
}

OperatorHandle make_operator(const std::string& key,
                             const std::map<std::string, double>& params) {
    if (key == "S") return catalog_S();
    if (key == "G") return catalog_G();
    if (key == "R") {
        auto it = params.find("r");
        return catalog_R(it == params.end() ? 0.0 : it->second);
    }
    if (key == "f5") return catalog_f5();
    throw std::invalid_argument("make_operator: unknown operator key '" + key + "'");
}

}  // namespace latlip
