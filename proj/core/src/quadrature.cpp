#include "zeno/quadrature.hpp"

#include <numbers>
#include <utility>

namespace zeno::quad {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double pk = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = pk;
    }
    const double dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

GaussLegendreRule GaussLegendreRule::make(std::size_t n) {
    if (n == 0) throw DomainError("Gauss-Legendre rule needs at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace detail {

const GaussLegendreRule& panel_rule() {
    static const GaussLegendreRule rule = GaussLegendreRule::make(16);
    return rule;
}

}  // namespace detail

}  // namespace zeno::quad
