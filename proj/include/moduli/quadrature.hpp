#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moduli {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

namespace detail {

// (P_n(x), P_{n-1}(x)) by the three-term recurrence.
inline std::pair<double, double> legendre_pair(std::size_t n, double x) {
    double prev = 1.0;
    double cur = x;
    for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double next = ((2.0 * dk - 1.0) * x * cur - (dk - 1.0) * prev) / dk;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

}  // namespace detail

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
inline QuadratureRule gauss_legendre(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double dn = static_cast<double>(n);
    const auto derivative = [&](double x) {
        const auto [pn, pm] = detail::legendre_pair(n, x);
        return std::pair{pn, dn * (x * pn - pm) / (x * x - 1.0)};
    };
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [pn, dp] = derivative(x);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double dp = derivative(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

/// Composite Gauss-Legendre on [a, b]: `panels` equal subintervals of `order` nodes.
inline QuadratureRule composite_gauss_legendre(double a, double b, std::size_t panels, std::size_t order) {
    if (panels == 0) {
        throw std::invalid_argument("composite rule needs at least one panel");
    }
    const QuadratureRule base = gauss_legendre(order);
    QuadratureRule rule;
    rule.nodes.reserve(panels * order);
    rule.weights.reserve(panels * order);
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        for (std::size_t i = 0; i < order; ++i) {
            rule.nodes.push_back(lo + 0.5 * h * (base.nodes[i] + 1.0));
            rule.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return rule;
}

/// Equispaced trapezoid rule for 1-periodic integrands on [0, 1).
/// Exact for trigonometric polynomials e^{2 pi i f x} with |f| < n.
inline QuadratureRule periodic_trapezoid(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("trapezoid rule needs at least one node");
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.assign(n, 1.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = static_cast<double>(i) / static_cast<double>(n);
    }
    return rule;
}

}  // namespace moduli
