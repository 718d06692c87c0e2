#include "zeno/kernel_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno::bath {

namespace {

constexpr std::size_t kMaxPanels = 8192;

using Coeffs = std::array<std::complex<double>, KernelTable::kNodes>;

Coeffs chebyshev_fit(const BathKernel& kernel, double a, double b) {
    constexpr std::size_t n = KernelTable::kNodes;
    std::array<std::complex<double>, n> values;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.5) / n);
        values[k] = kernel.phi_shifted(0.5 * (a + b) + 0.5 * (b - a) * x);
    }
    Coeffs c{};
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> sum;
        for (std::size_t k = 0; k < n; ++k)
            sum += values[k] * std::cos(std::numbers::pi * static_cast<double>(j) * (static_cast<double>(k) + 0.5) / n);
        c[j] = sum * (2.0 / n);
    }
    c[0] *= 0.5;
    return c;
}

std::complex<double> clenshaw(const Coeffs& c, double x) {
    std::complex<double> b1, b2;
    for (std::size_t j = c.size(); j-- > 1;) {
        const auto b0 = 2.0 * x * b1 - b2 + c[j];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + c[0];
}

}  // namespace

KernelTable::KernelTable(const BathKernel& kernel, double t_max, double abs_tol)
    : kernel_(kernel), t_max_(t_max) {
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw DomainError("kernel table: t_max must be finite and >= 0");
    if (kernel_.is_discrete() || t_max == 0.0) return;

    const double tol = abs_tol > 0.0 ? abs_tol : kernel_.settings().abs_tol;
    const double min_width = t_max * 1e-9;
    struct Work {
        double a, b;
    };
    std::vector<Work> stack{{0.0, t_max}};
    while (!stack.empty()) {
        const Work w = stack.back();
        stack.pop_back();
        auto c = chebyshev_fit(kernel_, w.a, w.b);
        double tail = 0.0;
        for (std::size_t j = kNodes - 3; j < kNodes; ++j) tail = std::max(tail, std::abs(c[j]));
        if (tail <= tol || (w.b - w.a) <= min_width) {
            panels_.push_back({w.a, w.b, c});
            continue;
        }
        if (panels_.size() + stack.size() >= kMaxPanels)
            throw QuadratureFailure("kernel table: panel budget exhausted", tail, tol);
        const double m = 0.5 * (w.a + w.b);
        stack.push_back({m, w.b});
        stack.push_back({w.a, m});
    }
    std::sort(panels_.begin(), panels_.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
}

std::complex<double> KernelTable::psi(double t) const {
    if (kernel_.is_discrete() || panels_.empty()) return kernel_.phi_shifted(t);
    const double at = std::abs(t);
    if (at > t_max_ * (1.0 + 1e-12)) throw DomainError("kernel table evaluated outside its range");
    auto it = std::upper_bound(panels_.begin(), panels_.end(), at, [](double v, const Panel& p) { return v < p.a; });
    const Panel& p = (it == panels_.begin()) ? panels_.front() : *std::prev(it);
    const double x = std::clamp((2.0 * at - p.a - p.b) / (p.b - p.a), -1.0, 1.0);
    const auto v = clenshaw(p.coeffs, x);
    return t < 0.0 ? std::conj(v) : v;
}

}  // namespace zeno::bath
