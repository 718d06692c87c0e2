// Gauss–Legendre rules, adaptive panel integration and the
// semi-infinite driver used by the bath kernel.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno::quad {

// n-point Gauss–Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static GaussLegendreRule make(std::size_t n);
    std::size_t size() const noexcept { return nodes.size(); }
};

struct AdaptiveOptions {
    double abs_tol{1e-10};
    int max_depth{40};
    // Panels wider than this are split before any error test (oscillation control).
    double max_panel_width{std::numeric_limits<double>::infinity()};
};

struct SemiInfiniteOptions {
    AdaptiveOptions adaptive{};
    // Characteristic length of the integrand; sets the first block [0, scale].
    double scale{1.0};
    // If set, the integral is taken over [0, truncation] only (caller vouches for the tail).
    std::optional<double> truncation{};
    // Maximum geometric refinement levels toward the origin (handles ω^q, q > -1).
    int origin_levels{200};
    int max_blocks{80};
};

template <class T>
struct Estimate {
    T value{};
    double abs_value{0.0};  // ∫|f|, used for tail detection
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }
inline double scalar_part(double x) { return x; }
inline double scalar_part(const std::complex<double>& z) { return z.real(); }

// Fixed 16-point panel rule used by the adaptive integrator.
const GaussLegendreRule& panel_rule();

template <class F, class T>
Estimate<T> panel(F& f, double a, double b) {
    const auto& rule = panel_rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Estimate<T> e{};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const T v = f(mid + half * rule.nodes[i]);
        e.value += rule.weights[i] * v;
        e.abs_value += rule.weights[i] * magnitude(v);
    }
    e.value *= half;
    e.abs_value *= half;
    return e;
}

}  // namespace detail

// Adaptive Gauss–Legendre on [a, b]: a panel is accepted when the 16-point
// estimate and the sum over its two halves agree within the panel's share of
// the tolerance (share proportional to width).
template <class F>
auto integrate_interval(F&& f, double a, double b, const AdaptiveOptions& opt)
    -> Estimate<std::decay_t<decltype(f(a))>> {
    using T = std::decay_t<decltype(f(a))>;
    Estimate<T> total{};
    if (!(b > a)) return total;
    const double length = b - a;

    struct Work {
        double a, b;
        int depth;
    };
    std::vector<Work> stack;
    // Split to the width cap first so the tolerance share is assigned per panel.
    const double cap = opt.max_panel_width;
    std::size_t pieces = 1;
    if (std::isfinite(cap) && length > cap)
        pieces = static_cast<std::size_t>(std::ceil(length / cap));
    for (std::size_t k = pieces; k-- > 0;) {
        const double lo = a + length * static_cast<double>(k) / static_cast<double>(pieces);
        const double hi = (k + 1 == pieces) ? b : a + length * static_cast<double>(k + 1) / static_cast<double>(pieces);
        stack.push_back({lo, hi, 0});
    }

    while (!stack.empty()) {
        const Work w = stack.back();
        stack.pop_back();
        const double m = 0.5 * (w.a + w.b);
        const auto whole = detail::panel<F, T>(f, w.a, w.b);
        const auto left = detail::panel<F, T>(f, w.a, m);
        const auto right = detail::panel<F, T>(f, m, w.b);
        const T halves = left.value + right.value;
        const double err = detail::magnitude(halves - whole.value);
        const double share = opt.abs_tol * (w.b - w.a) / length;
        if (err <= share || (w.b - w.a) <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(m))) {
            total.value += halves;
            total.abs_value += left.abs_value + right.abs_value;
            continue;
        }
        if (w.depth >= opt.max_depth)
            throw QuadratureFailure("adaptive quadrature did not converge within the depth budget",
                                    detail::scalar_part(whole.value), detail::scalar_part(halves));
        stack.push_back({m, w.b, w.depth + 1});
        stack.push_back({w.a, m, w.depth + 1});
    }
    return total;
}

// ∫_0^∞ f. The origin block [0, scale] is graded geometrically toward 0
// until the levels fall below abs_tol·1e-3,
// then blocks [scale·2^j, scale·2^{j+1}] are added until two consecutive
// blocks carry less than abs_tol·1e-3 of absolute mass, or until the
// optional truncation point is reached.
template <class F>
auto integrate_semiinfinite(F&& f, const SemiInfiniteOptions& opt)
    -> Estimate<std::decay_t<decltype(f(0.0))>> {
    using T = std::decay_t<decltype(f(0.0))>;
    Estimate<T> total{};
    const double tol = opt.adaptive.abs_tol;
    const double end = opt.truncation.value_or(std::numeric_limits<double>::infinity());
    const double scale = std::min(opt.scale, end);

    AdaptiveOptions local = opt.adaptive;
    // Origin grading: [scale/2^{k+1}, scale/2^k] until two consecutive levels
    // and the remaining sliver [0, scale/2^k] carry negligible mass.
    {
        double hi = scale;
        int quiet_levels = 0;
        for (int k = 0; k < opt.origin_levels; ++k) {
            const double lo = 0.5 * hi;
            local.abs_tol = tol * std::pow(2.0, -(k + 3));
            const auto e = integrate_interval(f, lo, hi, local);
            total.value += e.value;
            total.abs_value += e.abs_value;
            hi = lo;
            quiet_levels = (e.abs_value < 1e-3 * tol) ? quiet_levels + 1 : 0;
            if (quiet_levels >= 2) break;
        }
        const auto sliver = detail::panel<F, T>(f, 0.0, hi);
        total.value += sliver.value;
        total.abs_value += sliver.abs_value;
    }

    double lo = scale;
    int quiet = 0;
    double previous = detail::scalar_part(total.value);
    for (int j = 0; j < opt.max_blocks && lo < end; ++j) {
        const double hi = std::min(2.0 * lo, end);
        local.abs_tol = tol / std::pow(2.0, j + 2);
        const auto e = integrate_interval(f, lo, hi, local);
        total.value += e.value;
        total.abs_value += e.abs_value;
        lo = hi;
        if (!opt.truncation) {
            quiet = (e.abs_value < 1e-3 * tol) ? quiet + 1 : 0;
            if (quiet >= 2) return total;
        }
        previous = detail::scalar_part(total.value);
    }
    if (!opt.truncation && lo < end)
        throw QuadratureFailure("semi-infinite quadrature tail did not decay within the block budget",
                                previous, detail::scalar_part(total.value));
    return total;
}

}  // namespace zeno::quad
