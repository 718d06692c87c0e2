#include "zeno/bath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/quadrature.hpp"

namespace zeno::bath {

void SpectralDensity::validate() const {
    if (!(coupling >= 0.0) || !std::isfinite(coupling))
        throw DomainError("spectral density: coupling G must be finite and >= 0");
    if (!(ohmicity > 0.0) || !std::isfinite(ohmicity))
        throw DomainError("spectral density: ohmicity s must be finite and > 0");
    if (!(cutoff > 0.0) || !std::isfinite(cutoff))
        throw DomainError("spectral density: cutoff omega_c must be finite and > 0");
}

double SpectralDensity::operator()(double omega) const {
    if (omega < 0.0) throw DomainError("spectral density evaluated at negative frequency");
    if (coupling == 0.0 || omega == 0.0) return 0.0;
    return coupling * std::pow(omega, ohmicity) * std::pow(cutoff, 1.0 - ohmicity) * std::exp(-omega / cutoff);
}

double eval_J(const SpectralDensity& density, double omega) { return density(omega); }

DiscreteBath::DiscreteBath(std::vector<BathMode> modes) : modes_(std::move(modes)) {
    double previous = 0.0;
    for (const auto& m : modes_) {
        if (!(m.omega > previous) || !std::isfinite(m.omega))
            throw DomainError("discrete bath: frequencies must be positive and strictly increasing");
        if (!(m.g >= 0.0) || !std::isfinite(m.g))
            throw DomainError("discrete bath: couplings must be finite and >= 0");
        previous = m.omega;
    }
}

InverseTemperature InverseTemperature::finite(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError("inverse temperature must be finite and > 0 (use zero_temperature() for beta -> inf)");
    InverseTemperature t;
    t.zero_ = false;
    t.beta_ = beta;
    return t;
}

double InverseTemperature::coth_half(double omega) const {
    if (zero_) return 1.0;
    return 1.0 + 2.0 / std::expm1(beta_ * omega);
}

bool phi_r0_diverges(const SpectralDensity& density, const InverseTemperature& temperature) {
    if (density.coupling == 0.0) return false;
    return temperature.is_zero_temperature() ? density.ohmicity <= 1.0 : density.ohmicity <= 2.0;
}

namespace {

// J(ω)/ω², evaluated in log form so ω^{s-2} never over/underflows on its own.
double weight(const SpectralDensity& d, double omega) {
    if (omega <= 0.0 || d.coupling == 0.0) return 0.0;
    const double log_w = (d.ohmicity - 2.0) * std::log(omega) + (1.0 - d.ohmicity) * std::log(d.cutoff) - omega / d.cutoff;
    return d.coupling * std::exp(log_w);
}

// Smallest W (grown geometrically) with a provable tail bound below `target`:
// for ω ≥ W ≥ 2|s−2|ω_c the envelope decays at least like e^{-(ω−W)/(2ω_c)}, so
// ∫_W^∞ 3·coth·J/ω² ≤ 3·coth(βW/2)·J(W)/W²·2ω_c.
double choose_truncation(const SpectralDensity& d, const InverseTemperature& temp, double target) {
    double w = d.cutoff * std::max(1.0, 2.0 * std::abs(d.ohmicity - 2.0));
    for (int i = 0; i < 400; ++i) {
        const double bound = 3.0 * temp.coth_half(w) * weight(d, w) * 2.0 * d.cutoff;
        if (bound < target) return w;
        w *= 1.25;
    }
    return w;
}

}  // namespace

BathKernel::BathKernel(SpectralDensity density, InverseTemperature temperature, KernelSettings settings)
    : source_(density), temperature_(temperature), settings_(settings) {
    density.validate();
    if (!(settings_.abs_tol > 0.0)) throw DomainError("kernel tolerance must be > 0");
    truncation_ = choose_truncation(density, temperature_, settings_.abs_tol * 1e-3);
    if (density.coupling == 0.0) {
        phi_r0_ = 0.0;
        coherence_ = 1.0;
    } else if (phi_r0_diverges(density, temperature_)) {
        divergent_ = true;
        phi_r0_ = std::numeric_limits<double>::infinity();
        coherence_ = 0.0;
    } else {
        phi_r0_ = integrate(0.0, false).real();
        coherence_ = std::exp(-0.5 * phi_r0_);
    }
}

BathKernel::BathKernel(DiscreteBath bath, InverseTemperature temperature)
    : source_(std::move(bath)), temperature_(temperature) {
    double sum = 0.0;
    for (const auto& m : std::get<DiscreteBath>(source_).modes())
        sum += m.alpha() * m.alpha() * temperature_.coth_half(m.omega);
    phi_r0_ = sum;
    coherence_ = std::exp(-0.5 * sum);
}

std::complex<double> BathKernel::integrate(double t, bool shifted) const {
    const double at = std::abs(t);
    std::complex<double> value;
    if (const auto* bath = std::get_if<DiscreteBath>(&source_)) {
        for (const auto& m : bath->modes()) {
            const double a2 = m.alpha() * m.alpha();
            const double c = temperature_.coth_half(m.omega);
            const double re = shifted ? -2.0 * std::pow(std::sin(0.5 * m.omega * at), 2) * c : std::cos(m.omega * at) * c;
            value += a2 * std::complex<double>(re, -std::sin(m.omega * at));
        }
    } else {
        const auto& d = std::get<SpectralDensity>(source_);
        if (d.coupling == 0.0) return {0.0, 0.0};
        auto integrand = [&](double w) {
            const double jw = weight(d, w);
            const double c = temperature_.coth_half(w);
            const double re = shifted ? -2.0 * std::pow(std::sin(0.5 * w * at), 2) * c : std::cos(w * at) * c;
            return std::complex<double>(jw * re, -jw * std::sin(w * at));
        };
        quad::SemiInfiniteOptions opt;
        opt.adaptive.abs_tol = settings_.abs_tol;
        opt.adaptive.max_depth = settings_.max_depth;
        opt.scale = d.cutoff;
        opt.truncation = truncation_;
        if (at * truncation_ > 50.0) opt.adaptive.max_panel_width = std::numbers::pi / (4.0 * at);
        value = quad::integrate_semiinfinite(integrand, opt).value;
    }
    return t < 0.0 ? std::conj(value) : value;
}

std::complex<double> BathKernel::phi(double t) const {
    if (divergent_)
        throw DivergentKernel("phi_R diverges for this bath (s <= 1 at zero temperature or s <= 2 at finite temperature)");
    return integrate(t, false);
}

std::complex<double> BathKernel::phi_shifted(double t) const { return integrate(t, true); }

std::complex<double> BathKernel::dressed_minus_from(std::complex<double> psi) const {
    if (divergent_) return {0.0, 0.0};
    return std::exp(-psi - 2.0 * phi_r0_);
}

std::complex<double> BathKernel::dressed_plus(double t) const { return dressed_plus_from(phi_shifted(t)); }

std::complex<double> BathKernel::dressed_minus(double t) const { return dressed_minus_from(phi_shifted(t)); }

std::complex<double> BathKernel::correlation(CorrelationIndex index, double t) const {
    const auto psi = phi_shifted(t);
    const auto plus = dressed_plus_from(psi);
    const auto minus = dressed_minus_from(psi);
    const double b2 = coherence_ * coherence_;
    if (index == CorrelationIndex::XX) return 0.5 * (plus + minus - 2.0 * b2);
    return 0.5 * (plus - minus);
}

double BathKernel::cutoff_frequency() const noexcept {
    if (const auto* d = std::get_if<SpectralDensity>(&source_)) return d->cutoff;
    return std::get<DiscreteBath>(source_).max_frequency();
}

std::complex<double> phi(const BathKernel& kernel, double t) { return kernel.phi(t); }

double coherence_B(const BathKernel& kernel) { return kernel.coherence(); }

std::complex<double> correlation_C(const BathKernel& kernel, CorrelationIndex index, double t) {
    return kernel.correlation(index, t);
}

}  // namespace zeno::bath
