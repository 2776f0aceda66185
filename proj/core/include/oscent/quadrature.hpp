#pragma once

#include <functional>
#include <vector>

namespace oscent::quadrature {

/// Nodes and weights of the order-n Gauss-Legendre rule on [-1, 1],
/// ascending by node. Computed once per order and cached.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

/// Integral of f over [a, b] by adaptive bisection of fixed-order
/// Gauss-Legendre panels. A panel is accepted when its value agrees with the
/// sum over its two halves within the local share of abs_tol. Throws
/// IntegrationError (carrying the best estimate) once a panel would exceed
/// max_depth subdivisions.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 48);

} // namespace oscent::quadrature
