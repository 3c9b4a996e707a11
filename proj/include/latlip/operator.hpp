#pragma once

#include "latlip/types.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace latlip {

/// A ray through the origin on which an operator acts by pure scaling.
/// `eigenvalue(t)` is the scaling factor at the point t * direction.
/// Metadata for oracle tests only; evaluation never uses it.
struct EigenRay {
    Vec direction;
    std::function<double(double)> eigenvalue;
};

/// Black-box evaluable map R^n -> R^n with an evaluation domain box.
/// Evaluation is a pure function: deterministic, no interior mutation,
/// safe to call concurrently from many workers.
class OperatorHandle {
public:
    OperatorHandle(int dimension,
                   std::function<Vec(const Vec&)> evaluate,
                   Box domain_box,
                   std::vector<EigenRay> known_eigenrays = {});

    int dimension() const { return dimension_; }
    const Box& domain_box() const { return domain_box_; }
    const std::vector<EigenRay>& known_eigenrays() const { return known_eigenrays_; }

    Vec operator()(const Vec& x) const;

private:
    int dimension_;
    std::function<Vec(const Vec&)> evaluate_;
    Box domain_box_;
    std::vector<EigenRay> known_eigenrays_;
};

// Catalog of concrete test operators.

/// S(x,y) = (x^2 + y^2, 2xy) on [-1,1]^2. Diagonal with respect to the
/// basis {(1,1),(1,-1)}; rays through (1,0), (1,1), (1,-1) are eigenrays.
OperatorHandle catalog_S();

/// G(x,y) = (x - y + |y|/(1+|y|), |y|/(1+|y|)) on [-5,5]^2. Rays through
/// (1,0) and (1,1) are eigenrays.
OperatorHandle catalog_G();

/// R_r(x,y) = (8x + r sin(5xy), 4x^2 + 4xy + y^2 - 2x - sqrt(|x+y|)/5)
/// on [-5,5]^2. Not Lipschitz at x+y=0 because of the square root;
/// empirical constant estimates dominate any analysis of it.
OperatorHandle catalog_R(double r);

/// f(x,y) = (x + y + sin(10x)/5 + xy/100, x - y - cos(x+5y)/10)
/// on [-5,5]^2: the map (x+y, x-y) plus a small perturbation.
OperatorHandle catalog_f5();

/// Registry lookup by key: "S", "G", "R" (parameter "r"), "f5".
OperatorHandle make_operator(const std::string& key,
                             const std::map<std::string, double>& params = {});

}  // namespace latlip
