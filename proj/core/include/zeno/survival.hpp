// Survival probability s(τ) after one measurement interval and
// the effective decay rate Γ(τ) = −ln s(τ)/τ, to second order in the
// polaron-frame interaction.
//
// Modes:
//   Full               full polaron-frame expression
//   SmallDelta         Δ_r → 0 in the free evolution (Δ enters only H_I)
//   RemovedFull        free system evolution undone before the measurement
//   RemovedSmallDelta  the same with Δ_r → 0

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/bath.hpp"
#include "zeno/errors.hpp"
#include "zeno/kernel_table.hpp"
#include "zeno/polaron.hpp"
#include "zeno/quadrature.hpp"

namespace zeno::survival {

enum class SurvivalMode { Full, SmallDelta, RemovedFull, RemovedSmallDelta };

std::string_view to_string(SurvivalMode mode);
std::optional<SurvivalMode> parse_mode(std::string_view name);  // case-insensitive, '-' or '_'
bool is_removed(SurvivalMode mode) noexcept;
bool is_small_delta(SurvivalMode mode) noexcept;

// Printed is an alternative coefficient layout that disagrees with exact
// dynamics at second order (kept for comparison tests); Corrected is the form
// validated against exact dynamics.
enum class Transcription { Corrected, Printed };

struct SurvivalOptions {
    double abs_tol{1e-8};   // target absolute error on s
    int initial_order{64};  // Gauss–Legendre nodes per axis, doubled until converged
    int max_order{1024};
    Transcription transcription{Transcription::Corrected};
    double range_tolerance{1e-6};  // s ∈ (1, 1 + range_tolerance] is clamped to 1 for Γ
};

struct Diagnostics {
    double error_estimate{0.0};
    int order{0};
    std::size_t kernel_panels{0};
};

struct SurvivalResult {
    double tau{0.0};
    double s{1.0};
    double gamma{0.0};  // NaN when !in_regime
    double validity{0.0};
    bool clamped{false};
    bool in_regime{true};
    Diagnostics diagnostics{};
};

template <class T>
struct TriangleEstimate {
    T value{};
    double error{0.0};
    int order{0};
};

// ∫_0^τ dt ∫_0^t dt' f(t, t') by a tensor Gauss–Legendre rule (outer t, inner
// t' = t(x+1)/2), doubling the order until two successive estimates agree to
// abs_tol. `outer(t)` is called once per outer node and its result is handed
// to f as the first argument so per-t work is not repeated.
template <class Outer, class F>
auto integrate_triangle(Outer&& outer, F&& f, double tau, double abs_tol, int initial_order, int max_order)
    -> TriangleEstimate<std::decay_t<decltype(f(outer(0.0), 0.0, 0.0))>> {
    using T = std::decay_t<decltype(f(outer(0.0), 0.0, 0.0))>;
    if (initial_order < 2 || max_order < initial_order)
        throw DomainError("triangle quadrature: need 2 <= initial_order <= max_order");
    auto once = [&](int n) {
        const auto rule = quad::GaussLegendreRule::make(static_cast<std::size_t>(n));
        T sum{};
        for (int i = 0; i < n; ++i) {
            const double t = 0.5 * tau * (rule.nodes[i] + 1.0);
            const double wt = 0.5 * tau * rule.weights[i];
            const auto ctx = outer(t);
            T inner{};
            for (int j = 0; j < n; ++j) {
                const double tp = 0.5 * t * (rule.nodes[j] + 1.0);
                inner += rule.weights[j] * f(ctx, t, tp);
            }
            sum += (wt * 0.5 * t) * inner;
        }
        return sum;
    };
    int n = initial_order;
    T previous = once(n);
    while (true) {
        const int next = 2 * n;
        if (next > max_order)
            throw QuadratureFailure("triangle quadrature did not converge within the order budget",
                                    quad::detail::scalar_part(previous), quad::detail::scalar_part(previous));
        const T current = once(next);
        const double err = quad::detail::magnitude(current - previous);
        if (err <= abs_tol) return {current, err, next};
        if (2 * next > max_order)
            throw QuadratureFailure("triangle quadrature did not converge within the order budget",
                                    quad::detail::scalar_part(previous), quad::detail::scalar_part(current));
        previous = current;
        n = next;
    }
}

// Evaluates s(τ) for τ ∈ [0, tau_max] against one tabulated kernel. Const
// member functions are safe to call concurrently.
class SurvivalEvaluator {
public:
    SurvivalEvaluator(polaron::SystemParams sys, const bath::BathKernel& kernel, double tau_max,
                      SurvivalOptions opts = {});

    SurvivalResult evaluate(SurvivalMode mode, double tau) const;

    const polaron::SystemParams& system() const noexcept { return sys_; }
    const bath::KernelTable& table() const noexcept { return table_; }
    const SurvivalOptions& options() const noexcept { return opts_; }
    double validity() const noexcept { return validity_; }
    double tau_max() const noexcept { return tau_max_; }

private:
    TriangleEstimate<double> full(bool small, double tau) const;
    TriangleEstimate<double> removed(bool small, double tau) const;
    polaron::PolaronParams coefficient_params(bool small) const;

    polaron::SystemParams sys_;
    bath::KernelTable table_;
    SurvivalOptions opts_;
    double tau_max_;
    double validity_;
};

// Γ from s: clamps s ∈ (1, 1 + range_tolerance] to 1 and throws OutOfRegime
// for s ≤ 0 or s > 1 + range_tolerance.
double decay_rate_from(double s, double tau, double validity, double range_tolerance = 1e-6);

SurvivalResult survival_prob(SurvivalMode mode, const polaron::SystemParams& sys, const bath::BathKernel& kernel,
                             double tau, const SurvivalOptions& opts = {});
// Throws OutOfRegime when s(τ) leaves (0, 1 + range_tolerance].
double decay_rate(SurvivalMode mode, const polaron::SystemParams& sys, const bath::BathKernel& kernel, double tau,
                  const SurvivalOptions& opts = {});
// s(τ)^N: survival after N equally spaced measurements.
double survival_after_N(SurvivalMode mode, const polaron::SystemParams& sys, const bath::BathKernel& kernel,
                        double tau, unsigned N, const SurvivalOptions& opts = {});

// Independent matrix-level reconstruction of s(τ): the second-order density
// matrix is assembled from 2×2 operators U_S†σU_S and the kernel, without the
// scalar coefficient expansion. Used as an arbiter in tests. Fixed order.
std::complex<double> survival_reconstructed(SurvivalMode mode, const polaron::SystemParams& sys,
                                            const bath::KernelTable& table, double tau, int order = 128);

}  // namespace zeno::survival
