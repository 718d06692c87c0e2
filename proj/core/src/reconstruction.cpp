#include <array>

#include "zeno/survival.hpp"

namespace zeno::survival {

namespace {

using cd = std::complex<double>;
using M2 = Eigen::Matrix2cd;

struct Correlations {
    cd xx;
    cd yy;
};

Correlations correlations(const bath::KernelTable& table, double u, bool small) {
    const auto& k = table.kernel();
    const cd psi = table.psi(u);
    const cd plus = k.dressed_plus_from(psi);
    const cd minus = k.dressed_minus_from(psi);
    const double b2 = k.coherence() * k.coherence();
    // Without Δ_r in H_S the mean ⟨B_x⟩ = B stays in the interaction.
    const cd xx = 0.5 * (plus + minus) - (small ? 0.0 : b2);
    return {xx, 0.5 * (plus - minus)};
}

std::array<M2, 2> rotated(const polaron::PolaronParams& p, double t) {
    const M2 u = polaron::u_s_matrix(p, t);
    return {u.adjoint() * polaron::sigma_x() * u, u.adjoint() * polaron::sigma_y() * u};
}

}  // namespace

std::complex<double> survival_reconstructed(SurvivalMode mode, const polaron::SystemParams& sys,
                                            const bath::KernelTable& table, double tau, int order) {
    if (!(tau >= 0.0)) throw DomainError("reconstruction: tau must be >= 0");
    const bool small = is_small_delta(mode);
    auto p = polaron::renormalize(sys, table.kernel());
    if (small) p = polaron::without_renormalized_tunnelling(p);
    const double pref = 0.25 * sys.delta * sys.delta;
    const auto rule = quad::GaussLegendreRule::make(static_cast<std::size_t>(order));

    M2 rho0 = M2::Zero();
    rho0(0, 0) = 1.0;

    if (!is_removed(mode)) {
        M2 acc = M2::Zero();
        for (int i = 0; i < order; ++i) {
            const double t1 = 0.5 * tau * (rule.nodes[i] + 1.0);
            const double w1 = 0.5 * tau * rule.weights[i];
            const auto f1 = rotated(p, t1);
            for (int j = 0; j < order; ++j) {
                const double lag = 0.5 * t1 * (rule.nodes[j] + 1.0);
                const double w = w1 * 0.5 * t1 * rule.weights[j];
                const auto f2 = rotated(p, t1 - lag);
                const auto c = correlations(table, lag, small);
                const M2 x = c.xx * (f2[0] * rho0 * f1[0] - f1[0] * f2[0] * rho0) +
                             c.yy * (f2[1] * rho0 * f1[1] - f1[1] * f2[1] * rho0);
                acc += w * (x + x.adjoint());
            }
        }
        const M2 rho = rho0 + pref * acc;
        const M2 u = polaron::u_s_matrix(p, tau);
        return (u * rho * u.adjoint())(0, 0);
    }

    cd acc = 0.0;
    const auto c0 = correlations(table, 0.0, small);
    for (int i = 0; i < order; ++i) {
        const double t1 = 0.5 * tau * (rule.nodes[i] + 1.0);
        const double w1 = 0.5 * tau * rule.weights[i];
        const auto f1 = rotated(p, t1);
        const auto c_end = correlations(table, tau - t1, small);
        for (int j = 0; j < order; ++j) {
            const double lag = 0.5 * t1 * (rule.nodes[j] + 1.0);
            const double t2 = t1 - lag;
            const double w = w1 * 0.5 * t1 * rule.weights[j];
            const auto f2 = rotated(p, t2);
            const auto c_lag = correlations(table, -lag, small);
            const auto c_mid = correlations(table, t2 - tau, small);
            const cd kx = c_lag.xx - c_mid.xx - c_end.xx + c0.xx;
            const cd ky = c_lag.yy - c_mid.yy - c_end.yy + c0.yy;
            acc += w * (f1[0](1, 0) * f2[0](0, 1) * kx + f1[1](1, 0) * f2[1](0, 1) * ky);
        }
    }
    return 1.0 - pref * 2.0 * acc.real();
}

}  // namespace zeno::survival
