#include "zeno/survival.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "zeno/validity.hpp"

namespace zeno::survival {

namespace {

using cd = std::complex<double>;

constexpr double kTableTolFloor = 1e-13;

std::string normalize(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '-') c = '_';
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

struct OuterFull {
    polaron::RotationCoefficients r;
};

struct OuterRemoved {
    polaron::RotationCoefficients r;
    cd ep_tau;  // E₊(τ − t)
    cd em_tau;  // E₋(τ − t)
};

}  // namespace

std::string_view to_string(SurvivalMode mode) {
    switch (mode) {
        case SurvivalMode::Full: return "full";
        case SurvivalMode::SmallDelta: return "small_delta";
        case SurvivalMode::RemovedFull: return "removed_full";
        case SurvivalMode::RemovedSmallDelta: return "removed_small_delta";
    }
    return "unknown";
}

std::optional<SurvivalMode> parse_mode(std::string_view name) {
    const auto n = normalize(name);
    for (auto m : {SurvivalMode::Full, SurvivalMode::SmallDelta, SurvivalMode::RemovedFull,
                   SurvivalMode::RemovedSmallDelta})
        if (n == to_string(m)) return m;
    return std::nullopt;
}

bool is_removed(SurvivalMode mode) noexcept {
    return mode == SurvivalMode::RemovedFull || mode == SurvivalMode::RemovedSmallDelta;
}

bool is_small_delta(SurvivalMode mode) noexcept {
    return mode == SurvivalMode::SmallDelta || mode == SurvivalMode::RemovedSmallDelta;
}

SurvivalEvaluator::SurvivalEvaluator(polaron::SystemParams sys, const bath::BathKernel& kernel, double tau_max,
                                     SurvivalOptions opts)
    : sys_(sys),
      table_(kernel, sys.delta == 0.0 ? 0.0 : tau_max,
             std::max(kTableTolFloor, std::min(kernel.settings().abs_tol, opts.abs_tol * 1e-2))),
      opts_(opts),
      tau_max_(tau_max) {
    sys_.validate();
    if (!(opts_.abs_tol > 0.0)) throw DomainError("survival: abs_tol must be > 0");
    validity_ = regimes::validity_metric(sys_, kernel);
}

polaron::PolaronParams SurvivalEvaluator::coefficient_params(bool small) const {
    const auto p = polaron::renormalize(sys_, table_.kernel());
    return small ? polaron::without_renormalized_tunnelling(p) : p;
}

TriangleEstimate<double> SurvivalEvaluator::full(bool small, double tau) const {
    const auto p = coefficient_params(small);
    const auto [f, g, h] = polaron::fgh(p, tau);
    const double b2 = table_.kernel().coherence() * table_.kernel().coherence();
    const double pref = 0.25 * sys_.delta * sys_.delta;
    const bool printed = opts_.transcription == Transcription::Printed;
    const auto& kernel = table_.kernel();

    auto outer = [&](double t) { return OuterFull{polaron::rot_coeffs(p, t)}; };
    auto integrand = [&](const OuterFull& o, double t, double tp) {
        const auto& a = o.r;
        const auto b = polaron::rot_coeffs(p, t - tp);
        const cd psi = table_.psi(tp);
        const cd ep = kernel.dressed_plus_from(psi);
        const cd em = kernel.dressed_minus_from(psi);
        // by·bx' in the sine brackets; the printed layout has by·by' there.
        const double cross = printed ? a.by * b.by : a.by * b.bx;
        const double cos_plus = f * (a.ax * b.ax + a.ay * b.ay + a.bx * b.bx + a.by * b.by) +
                                g * (a.az * b.ax + a.bz * b.bx) + h * (a.az * b.ay + a.bz * b.by);
        const double sin_plus = f * (a.ax * b.ay - a.ay * b.ax + a.bx * b.by - cross) +
                                g * (a.az * b.ay - a.ay * b.az + a.bz * b.by - a.by * b.bz) +
                                h * (a.ax * b.az - a.az * b.ax + a.bx * b.bz - a.bz * b.bx);
        const double cos_minus = f * (a.ax * b.ax + a.ay * b.ay - a.bx * b.bx - a.by * b.by) +
                                 g * (a.az * b.ax - a.bz * b.bx) + h * (a.az * b.ay - a.bz * b.by);
        const double sin_minus = f * (a.ax * b.ay - a.ay * b.ax - a.bx * b.by + cross) +
                                 g * (a.az * b.ay - a.ay * b.az - a.bz * b.by + a.by * b.bz) +
                                 h * (a.ax * b.az - a.az * b.ax - a.bx * b.bz + a.bz * b.bx);
        double v = ep.real() * cos_plus - ep.imag() * sin_plus + em.real() * cos_minus - em.imag() * sin_minus;
        if (!small) v -= 2.0 * b2 * (f * (a.ax * b.ax + a.ay * b.ay) + g * a.az * b.ax + h * a.az * b.ay);
        return -pref * v;
    };
    auto est = integrate_triangle(outer, integrand, tau, opts_.abs_tol, opts_.initial_order, opts_.max_order);
    if (!small) {
        const double sh = std::sin(0.5 * p.omega_r * tau);
        est.value -= (p.delta_r * p.delta_r) / (p.omega_r * p.omega_r) * sh * sh;
    }
    est.value += 1.0;
    return est;
}

TriangleEstimate<double> SurvivalEvaluator::removed(bool small, double tau) const {
    const auto p = coefficient_params(small);
    const auto& kernel = table_.kernel();
    const double pref = 0.25 * sys_.delta * sys_.delta;
    const bool printed = opts_.transcription == Transcription::Printed;
    const cd ep0 = 1.0;
    const cd em0 = kernel.dressed_minus_from(0.0);

    auto outer = [&](double t) {
        const cd psi = table_.psi(printed ? t - tau : tau - t);
        return OuterRemoved{polaron::rot_coeffs(p, t), kernel.dressed_plus_from(psi), kernel.dressed_minus_from(psi)};
    };
    auto integrand = [&](const OuterRemoved& o, double t, double tp) {
        const auto& a = o.r;
        const auto b = polaron::rot_coeffs(p, t - tp);
        const cd A = cd(a.ax, a.ay) * cd(b.ax, -b.ay);
        const cd Bc = cd(a.bx, a.by) * cd(b.bx, -b.by);
        const cd psi_lag = table_.psi(t - tp - tau);
        const cd ep_lag = kernel.dressed_plus_from(psi_lag);
        const cd em_lag = kernel.dressed_minus_from(psi_lag);
        cd v;
        if (printed) {
            const cd psi_tp = table_.psi(tp);
            const cd ep = kernel.dressed_plus_from(psi_tp);
            const cd em = kernel.dressed_minus_from(psi_tp);
            v = (ep - o.ep_tau + ep0) * (A + Bc) + (em - o.em_tau + em0) * (A - Bc) +
                ep_lag * std::conj(A + Bc) - em_lag * std::conj(A - Bc);
        } else {
            const cd psi_tp = std::conj(table_.psi(tp));
            const cd ep = kernel.dressed_plus_from(psi_tp);
            const cd em = kernel.dressed_minus_from(psi_tp);
            v = (A + Bc) * (ep - ep_lag - o.ep_tau + ep0) + (A - Bc) * (em - em_lag - o.em_tau + em0);
        }
        return -pref * v.real();
    };
    auto est = integrate_triangle(outer, integrand, tau, opts_.abs_tol, opts_.initial_order, opts_.max_order);
    est.value += 1.0;
    return est;
}

SurvivalResult SurvivalEvaluator::evaluate(SurvivalMode mode, double tau) const {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("survival: tau must be finite and >= 0");
    if (tau > tau_max_ * (1.0 + 1e-12)) throw DomainError("survival: tau exceeds the evaluator range");
    SurvivalResult res;
    res.tau = tau;
    res.validity = validity_;
    res.diagnostics.kernel_panels = table_.panel_count();
    if (tau == 0.0 || sys_.delta == 0.0) {
        // still reject degenerate systems consistently
        (void)coefficient_params(is_small_delta(mode));
        return res;
    }
    const bool small = is_small_delta(mode);
    const auto est = is_removed(mode) ? removed(small, tau) : full(small, tau);
    res.s = est.value;
    res.diagnostics.error_estimate = est.error;
    res.diagnostics.order = est.order;
    if (res.s <= 0.0 || res.s > 1.0 + opts_.range_tolerance) {
        res.in_regime = false;
        res.gamma = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    res.clamped = res.s > 1.0;
    res.gamma = decay_rate_from(res.s, tau, validity_, opts_.range_tolerance);
    return res;
}

double decay_rate_from(double s, double tau, double validity, double range_tolerance) {
    if (!(tau > 0.0)) throw DomainError("decay rate: tau must be > 0");
    if (!(s > 0.0) || s > 1.0 + range_tolerance)
        throw OutOfRegime("survival probability outside (0, 1]: perturbation theory has broken down", s, validity);
    return -std::log(std::min(s, 1.0)) / tau;
}

SurvivalResult survival_prob(SurvivalMode mode, const polaron::SystemParams& sys, const bath::BathKernel& kernel,
                             double tau, const SurvivalOptions& opts) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("survival: tau must be finite and >= 0");
    return SurvivalEvaluator(sys, kernel, tau, opts).evaluate(mode, tau);
}

double decay_rate(SurvivalMode mode, const polaron::SystemParams& sys, const bath::BathKernel& kernel, double tau,
                  const SurvivalOptions& opts) {
    if (!(tau > 0.0)) throw DomainError("decay rate: tau must be > 0");
    const auto r = survival_prob(mode, sys, kernel, tau, opts);
    return decay_rate_from(r.s, tau, r.validity, opts.range_tolerance);
}

double survival_after_N(SurvivalMode mode, const polaron::SystemParams& sys, const bath::BathKernel& kernel,
                        double tau, unsigned N, const SurvivalOptions& opts) {
    const auto r = survival_prob(mode, sys, kernel, tau, opts);
    return std::pow(r.s, static_cast<double>(N));
}

}  // namespace zeno::survival
