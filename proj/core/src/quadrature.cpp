#include "oscent/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "oscent/errors.hpp"

namespace oscent::quadrature {

namespace {

constexpr double pi = 3.14159265358979323846;

GaussLegendreRule build_rule(int order) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<size_t>(order));
    rule.weights.resize(static_cast<size_t>(order));
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int l = 2; l <= order; ++l) {
                const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.nodes[static_cast<size_t>(order - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(order - 1 - i)] = w;
    }
    return rule;
}

double panel_value(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                   double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

struct PanelIntegrator {
    const GaussLegendreRule& rule;
    const std::function<double(double)>& f;
    int max_depth;

    double refine(double a, double b, double whole, double tol, int depth) const {
        const double mid = 0.5 * (a + b);
        const double left = panel_value(rule, f, a, mid);
        const double right = panel_value(rule, f, mid, b);
        const double split = left + right;
        const double err = std::abs(whole - split);
        if (err <= tol) {
            return split;
        }
        if (depth >= max_depth) {
            throw IntegrationError("panel at [" + std::to_string(a) + ", " +
                                       std::to_string(b) + "] did not settle",
                                   split, err);
        }
        return refine(a, mid, left, 0.5 * tol, depth + 1) +
               refine(mid, b, right, 0.5 * tol, depth + 1);
    }
};

} // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) {
        throw DomainError("quadrature order must be at least 1");
    }
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, build_rule(order)).first;
    }
    return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0)) {
        throw DomainError("integration tolerance must be positive");
    }
    if (a == b) {
        return 0.0;
    }
    const auto& rule = gauss_legendre(16);
    const PanelIntegrator integrator{rule, f, max_depth};
    const double whole = panel_value(rule, f, a, b);
    return integrator.refine(a, b, whole, abs_tol, 0);
}

} // namespace oscent::quadrature
