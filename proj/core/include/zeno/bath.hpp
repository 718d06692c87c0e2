// Spectral densities, the correlation exponent φ(t) and the
// coherence factor B of a linearly coupled harmonic bath.
//
// Conventions (ħ = 1):
//   J(ω)   = G ω^s ω_c^{1-s} e^{-ω/ω_c}
//   φ(t)   = ∫_0^∞ dω J(ω)/ω² [cos(ωt) coth(βω/2) − i sin(ωt)] = φ_R(t) − i φ_I(t)
//   B      = exp(−φ_R(0)/2)
//   C₁₁(t) = (B²/2)(e^{φ} + e^{−φ} − 2),  C₂₂(t) = (B²/2)(e^{φ} − e^{−φ})
//
// φ_R(0) diverges for s ≤ 1 at zero temperature and for s ≤ 2 at finite
// temperature; B is then exactly 0. The shifted exponent ψ(t) = φ(t) − φ_R(0)
// stays finite for every s > 0, so B²e^{±φ} is always evaluated through ψ.

#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <variant>
#include <vector>

namespace zeno::bath {

struct SpectralDensity {
    double coupling{0.0};  // G, dimensionless
    double ohmicity{3.0};  // s
    double cutoff{1.0};    // ω_c

    // Throws DomainError unless G ≥ 0, s > 0, ω_c > 0.
    void validate() const;
    double operator()(double omega) const;
};

// J(ω); throws DomainError for ω < 0.
double eval_J(const SpectralDensity& density, double omega);

struct BathMode {
    double omega{1.0};
    double g{0.0};

    double alpha() const noexcept { return g / omega; }
};

// Explicit mode list; frequencies strictly positive and strictly increasing,
// couplings real and nonnegative.
class DiscreteBath {
public:
    DiscreteBath() = default;
    explicit DiscreteBath(std::vector<BathMode> modes);

    const std::vector<BathMode>& modes() const noexcept { return modes_; }
    std::size_t size() const noexcept { return modes_.size(); }
    double max_frequency() const noexcept { return modes_.empty() ? 0.0 : modes_.back().omega; }

private:
    std::vector<BathMode> modes_;
};

class InverseTemperature {
public:
    static InverseTemperature zero_temperature() noexcept { return InverseTemperature(); }
    static InverseTemperature finite(double beta);

    bool is_zero_temperature() const noexcept { return zero_; }
    // +∞ at zero temperature.
    double beta() const noexcept { return zero_ ? std::numeric_limits<double>::infinity() : beta_; }
    // coth(βω/2) as 1 + 2/expm1(βω); exactly 1 at zero temperature.
    double coth_half(double omega) const;

    friend bool operator==(const InverseTemperature&, const InverseTemperature&) = default;

private:
    InverseTemperature() = default;
    bool zero_{true};
    double beta_{0.0};
};

struct KernelSettings {
    double abs_tol{1e-10};
    int max_depth{40};
};

enum class CorrelationIndex { XX = 11, YY = 22 };

class BathKernel {
public:
    using Source = std::variant<SpectralDensity, DiscreteBath>;

    explicit BathKernel(SpectralDensity density,
                        InverseTemperature temperature = InverseTemperature::zero_temperature(),
                        KernelSettings settings = {});
    explicit BathKernel(DiscreteBath bath,
                        InverseTemperature temperature = InverseTemperature::zero_temperature());

    // φ(t) = φ_R(t) − iφ_I(t). Throws DivergentKernel when φ_R diverges.
    std::complex<double> phi(double t) const;
    // ψ(t) = φ(t) − φ_R(0); finite for every admissible kernel.
    std::complex<double> phi_shifted(double t) const;

    bool divergent() const noexcept { return divergent_; }
    // φ_R(0), or +∞ when divergent.
    double phi_r0() const noexcept { return phi_r0_; }
    double coherence() const noexcept { return coherence_; }

    // B²e^{+φ(t)} = e^{ψ(t)} and B²e^{−φ(t)} = e^{−ψ(t) − 2φ_R(0)} (0 when divergent).
    std::complex<double> dressed_plus(double t) const;
    std::complex<double> dressed_minus(double t) const;
    // Same, for a ψ value already in hand.
    std::complex<double> dressed_plus_from(std::complex<double> psi) const { return std::exp(psi); }
    std::complex<double> dressed_minus_from(std::complex<double> psi) const;

    std::complex<double> correlation(CorrelationIndex index, double t) const;

    // ω_c for a spectral density, the highest mode frequency for a discrete bath.
    double cutoff_frequency() const noexcept;
    bool is_discrete() const noexcept { return std::holds_alternative<DiscreteBath>(source_); }
    const Source& source() const noexcept { return source_; }
    const InverseTemperature& temperature() const noexcept { return temperature_; }
    const KernelSettings& settings() const noexcept { return settings_; }

    // Integration upper limit W used for continuous sources (tail below abs_tol·1e-3).
    double truncation() const noexcept { return truncation_; }

private:
    std::complex<double> integrate(double t, bool shifted) const;

    Source source_;
    InverseTemperature temperature_;
    KernelSettings settings_;
    bool divergent_{false};
    double phi_r0_{0.0};
    double coherence_{1.0};
    double truncation_{0.0};
};

// Free-function forms of the kernel operations.
std::complex<double> phi(const BathKernel& kernel, double t);
double coherence_B(const BathKernel& kernel);
std::complex<double> correlation_C(const BathKernel& kernel, CorrelationIndex index, double t);

// Symbolic divergence test for ∫ J(ω)/ω² coth(βω/2) dω at the origin.
bool phi_r0_diverges(const SpectralDensity& density, const InverseTemperature& temperature);

}  // namespace zeno::bath
