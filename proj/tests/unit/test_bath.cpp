#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "zeno/bath.hpp"
#include "zeno/errors.hpp"

using namespace zeno;
using cd = std::complex<double>;

namespace {

// ∫ G ω^{s−2} ω_c^{1−s} e^{−ω/ω_c} e^{−iωt} dω at zero temperature.
cd phi_closed(double G, double s, double wc, double t) {
    return G * std::pow(wc, 1.0 - s) * std::tgamma(s - 1.0) * std::pow(cd(1.0 / wc, t), -(s - 1.0));
}

cd psi_closed(double G, double s, double wc, double t) {
    if (s == 1.0) return -G * std::log(cd(1.0, wc * t));
    const double k = G * std::pow(wc, 1.0 - s) * std::tgamma(s - 1.0);
    return k * (std::pow(cd(1.0 / wc, t), 1.0 - s) - std::pow(1.0 / wc, 1.0 - s));
}

// Finite temperature, s = 3: coth = 1 + 2 Σ e^{−nβω}, each term a shifted closed form.
cd phi_thermal_s3(double G, double wc, double beta, double t) {
    cd sum = phi_closed(G, 3.0, wc, t);
    const double a = 1.0 / wc;
    const long N = 200000;
    for (long n = 1; n <= N; ++n) {
        const double an = a + static_cast<double>(n) * beta;
        sum += G / (wc * wc) * (1.0 / ((an + cd(0, t)) * (an + cd(0, t))) + 1.0 / ((an - cd(0, t)) * (an - cd(0, t))));
    }
    // tail Σ_{n>N} 2/(a+nβ)² ≈ 2/(β(a+(N+½)β))
    sum += G / (wc * wc) * 2.0 / (beta * (a + (static_cast<double>(N) + 0.5) * beta));
    return sum;
}

}  // namespace

TEST(SpectralDensity, Evaluates) {
    const bath::SpectralDensity j{0.5, 3.0, 10.0};
    EXPECT_NEAR(j(2.0), 0.5 * 8.0 * std::pow(10.0, -2.0) * std::exp(-0.2), 1e-15);
    EXPECT_EQ(j(0.0), 0.0);
    EXPECT_THROW(bath::eval_J(j, -1.0), DomainError);
}

TEST(SpectralDensity, RejectsInvalidParameters) {
    EXPECT_THROW((bath::SpectralDensity{-1.0, 3.0, 10.0}.validate()), DomainError);
    EXPECT_THROW((bath::SpectralDensity{1.0, 0.0, 10.0}.validate()), DomainError);
    EXPECT_THROW((bath::SpectralDensity{1.0, 3.0, 0.0}.validate()), DomainError);
}

TEST(BathKernel, PhiMatchesClosedFormSuperOhmic) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    for (double t : {0.0, 0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 40.0}) {
        const auto want = phi_closed(1.0, 3.0, 10.0, t);
        const auto got = k.phi(t);
        EXPECT_NEAR(got.real(), want.real(), 1e-8) << t;
        EXPECT_NEAR(got.imag(), want.imag(), 1e-8) << t;
    }
}

TEST(BathKernel, PhiMatchesClosedFormNonIntegerOhmicity) {
    const bath::BathKernel k(bath::SpectralDensity{0.3, 2.5, 5.0});
    for (double t : {0.0, 0.2, 1.7, 6.0}) {
        const auto want = phi_closed(0.3, 2.5, 5.0, t);
        EXPECT_NEAR(std::abs(k.phi(t) - want), 0.0, 1e-8) << t;
    }
}

TEST(BathKernel, NegativeTimeIsConjugate) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    EXPECT_NEAR(std::abs(k.phi(-0.7) - std::conj(k.phi(0.7))), 0.0, 1e-14);
}

TEST(BathKernel, CoherenceFactorIdentity) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    EXPECT_NEAR(k.phi_r0(), 1.0, 1e-10);  // G Γ(2) ω_c^{-2} ω_c^{2}
    EXPECT_NEAR(k.coherence(), std::exp(-0.5 * k.phi_r0()), 1e-15);
    EXPECT_NEAR(bath::coherence_B(k), std::exp(-0.5), 1e-10);
}

TEST(BathKernel, DivergentBranches) {
    for (double s : {0.5, 1.0}) {
        const bath::BathKernel k(bath::SpectralDensity{1.0, s, 10.0});
        EXPECT_TRUE(k.divergent()) << s;
        EXPECT_EQ(k.coherence(), 0.0);
        EXPECT_THROW(k.phi(0.3), DivergentKernel);
        EXPECT_EQ(k.dressed_minus(0.3), cd(0.0, 0.0));
    }
    const auto beta = bath::InverseTemperature::finite(2.0);
    EXPECT_TRUE(bath::phi_r0_diverges(bath::SpectralDensity{1.0, 2.0, 10.0}, beta));
    EXPECT_FALSE(bath::phi_r0_diverges(bath::SpectralDensity{1.0, 2.5, 10.0}, beta));
    EXPECT_FALSE(bath::phi_r0_diverges(bath::SpectralDensity{1.0, 1.5, 10.0}, bath::InverseTemperature::zero_temperature()));
}

TEST(BathKernel, ShiftedKernelOhmicClosedForm) {
    const bath::BathKernel k(bath::SpectralDensity{1.5, 1.0, 10.0});
    for (double t : {0.05, 0.5, 2.0, 8.0}) EXPECT_NEAR(std::abs(k.phi_shifted(t) - psi_closed(1.5, 1.0, 10.0, t)), 0.0, 1e-8) << t;
}

TEST(BathKernel, ShiftedKernelSubOhmicClosedForm) {
    const bath::BathKernel k(bath::SpectralDensity{0.4, 0.5, 10.0});
    for (double t : {0.05, 0.5, 2.0}) EXPECT_NEAR(std::abs(k.phi_shifted(t) - psi_closed(0.4, 0.5, 10.0, t)), 0.0, 1e-8) << t;
}

TEST(BathKernel, FiniteTemperatureMatchesMatsubaraSeries) {
    const double beta = 2.0;
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0}, bath::InverseTemperature::finite(beta));
    for (double t : {0.0, 0.3, 2.0}) EXPECT_NEAR(std::abs(k.phi(t) - phi_thermal_s3(1.0, 10.0, beta, t)), 0.0, 1e-7) << t;
    const bath::BathKernel cold(bath::SpectralDensity{1.0, 3.0, 10.0});
    EXPECT_LT(k.coherence(), cold.coherence());
}

TEST(BathKernel, CorrelationIdentities) {
    const bath::BathKernel k(bath::SpectralDensity{0.5, 3.0, 10.0});
    const double b2 = k.coherence() * k.coherence();
    for (double t : {0.0, 0.4, 3.0}) {
        const auto phi = phi_closed(0.5, 3.0, 10.0, t);
        const cd c11 = 0.5 * b2 * (std::exp(phi) + std::exp(-phi) - 2.0);
        const cd c22 = 0.5 * b2 * (std::exp(phi) - std::exp(-phi));
        EXPECT_NEAR(std::abs(bath::correlation_C(k, bath::CorrelationIndex::XX, t) - c11), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(bath::correlation_C(k, bath::CorrelationIndex::YY, t) - c22), 0.0, 1e-9);
    }
}

TEST(BathKernel, ZeroCouplingIsTrivial) {
    const bath::BathKernel k(bath::SpectralDensity{0.0, 3.0, 10.0});
    EXPECT_EQ(k.coherence(), 1.0);
    EXPECT_EQ(std::abs(k.phi(1.3)), 0.0);
}

TEST(BathKernel, DiscreteSumsDirectly) {
    const bath::DiscreteBath db({{1.0, 0.3}, {3.0, 0.6}});
    const bath::BathKernel k(db);
    const double t = 0.8;
    cd want = 0.0;
    for (const auto& m : db.modes()) want += m.g * m.g / (m.omega * m.omega) * std::exp(cd(0.0, -m.omega * t));
    EXPECT_NEAR(std::abs(k.phi(t) - want), 0.0, 1e-15);
    EXPECT_NEAR(k.phi_r0(), 0.09 + 0.04, 1e-15);
    EXPECT_TRUE(k.is_discrete());
}

TEST(DiscreteBath, RejectsUnorderedModes) {
    EXPECT_THROW(bath::DiscreteBath({{3.0, 0.1}, {1.0, 0.1}}), DomainError);
    EXPECT_THROW(bath::DiscreteBath({{0.0, 0.1}}), DomainError);
}

TEST(InverseTemperature, CothHalf) {
    const auto b = bath::InverseTemperature::finite(0.5);
    EXPECT_NEAR(b.coth_half(2.0), 1.0 / std::tanh(0.5), 1e-14);
    EXPECT_EQ(bath::InverseTemperature::zero_temperature().coth_half(2.0), 1.0);
    EXPECT_THROW(bath::InverseTemperature::finite(-1.0), DomainError);
}
