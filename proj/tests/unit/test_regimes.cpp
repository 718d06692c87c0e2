#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"
#include "zeno/regimes.hpp"

using namespace zeno;
using regimes::Regime;

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

}  // namespace

TEST(TauGrid, LinearAndGeometric) {
    const regimes::TauGrid lin{0.5, 2.5, 5, regimes::GridSpacing::Linear};
    EXPECT_EQ(lin.values(), (std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5}));
    const regimes::TauGrid geo{0.01, 100.0, 5, regimes::GridSpacing::Geometric};
    const auto v = geo.values();
    ASSERT_EQ(v.size(), 5u);
    EXPECT_EQ(v.front(), 0.01);
    EXPECT_EQ(v.back(), 100.0);
    EXPECT_NEAR(v[2], 1.0, 1e-14);
    EXPECT_THROW((regimes::TauGrid{0.0, 1.0, 5}.validate()), DomainError);
    EXPECT_THROW((regimes::TauGrid{1.0, 1.0, 5}.validate()), DomainError);
    EXPECT_THROW((regimes::TauGrid{0.1, 1.0, 1}.validate()), DomainError);
}

TEST(Classify, MonotoneIncreasingIsOneZenoSegment) {
    const auto tau = linspace(0.1, 3.0, 30);
    std::vector<double> gamma;
    for (double t : tau) gamma.push_back(t * t);
    const auto r = regimes::classify(tau, gamma);
    EXPECT_TRUE(r.crossovers.empty());
    ASSERT_EQ(r.segments.size(), 1u);
    EXPECT_EQ(r.segments[0].regime, Regime::Zeno);
    EXPECT_EQ(r.segments[0].tau_begin, 0.1);
    EXPECT_EQ(r.segments[0].tau_end, 3.0);
}

TEST(Classify, MonotoneDecreasingIsAntiZeno) {
    const auto tau = linspace(0.1, 3.0, 30);
    std::vector<double> gamma;
    for (double t : tau) gamma.push_back(1.0 / t);
    const auto r = regimes::classify(tau, gamma);
    ASSERT_EQ(r.segments.size(), 1u);
    EXPECT_EQ(r.segments[0].regime, Regime::AntiZeno);
}

TEST(Classify, SineHasOneCrossoverAtHalfPi) {
    const auto tau = linspace(0.1, 3.0, 40);
    std::vector<double> gamma;
    for (double t : tau) gamma.push_back(std::sin(t) + 2.0);
    const auto r = regimes::classify(tau, gamma);
    ASSERT_EQ(r.crossovers.size(), 1u);
    EXPECT_NEAR(r.crossovers[0].tau, std::numbers::pi / 2, tau[1] - tau[0]);
    EXPECT_EQ(r.crossovers[0].from, Regime::Zeno);
    EXPECT_EQ(r.crossovers[0].to, Regime::AntiZeno);
    ASSERT_EQ(r.segments.size(), 2u);
    EXPECT_EQ(r.segments[0].tau_end, r.segments[1].tau_begin);
    EXPECT_EQ(r.regime_at(0.5), Regime::Zeno);
    EXPECT_EQ(r.regime_at(2.5), Regime::AntiZeno);
}

TEST(Classify, QuadraticVertexIsAccurate) {
    const auto tau = linspace(0.0, 2.0, 21);
    std::vector<double> gamma;
    for (double t : tau) gamma.push_back(-(t - 0.83) * (t - 0.83));
    const auto r = regimes::classify(tau, gamma);
    ASSERT_EQ(r.crossovers.size(), 1u);
    EXPECT_NEAR(r.crossovers[0].tau, 0.83, 1e-12);
}

TEST(Classify, InvariantUnderPositiveRescaling) {
    const auto tau = linspace(0.1, 9.0, 60);
    std::vector<double> gamma, scaled;
    for (double t : tau) {
        gamma.push_back(std::cos(t) * std::exp(-0.1 * t) + 3.0);
        scaled.push_back(1e4 * gamma.back());
    }
    const auto a = regimes::classify(tau, gamma);
    const auto b = regimes::classify(tau, scaled);
    ASSERT_EQ(a.crossovers.size(), b.crossovers.size());
    EXPECT_EQ(a.crossovers.size(), 2u);  // extrema near π − 0.1 and 2π − 0.1
    for (std::size_t i = 0; i < a.segments.size(); ++i) EXPECT_EQ(a.segments[i].regime, b.segments[i].regime);
}

TEST(Classify, NoiseBelowFloorIsIgnored) {
    const auto tau = linspace(0.1, 3.0, 50);
    std::vector<double> gamma;
    for (std::size_t i = 0; i < tau.size(); ++i) gamma.push_back(tau[i] + ((i % 2) ? 1e-8 : -1e-8));
    // rising slope is ~0.06 per step; ±2e-8 jitter on a plateau would not register either
    std::vector<double> plateau(tau.size(), 1.0);
    for (std::size_t i = 0; i < plateau.size(); ++i) plateau[i] += (i % 2) ? 5e-7 : 0.0;
    EXPECT_TRUE(regimes::classify(tau, gamma).crossovers.empty());
    EXPECT_TRUE(regimes::classify(tau, plateau).crossovers.empty());
}

TEST(Classify, Errors) {
    EXPECT_THROW(regimes::classify({0.1, 0.2}, {1.0, 2.0}), DomainError);
    EXPECT_THROW(regimes::classify({0.1, 0.2, 0.3}, {1.0, 2.0}), DomainError);
    EXPECT_THROW(regimes::classify({0.1, 0.3, 0.2}, {1.0, 2.0, 3.0}), DomainError);
    EXPECT_THROW(regimes::classify({0.1, 0.2, 0.3}, {1.0, NAN, 3.0}), DomainError);
}

TEST(Validity, Examples) {
    EXPECT_EQ(regimes::validity_metric(5.0, 10.0, 1.0), 0.0);
    EXPECT_NEAR(regimes::validity_metric(2.0, 10.0, 0.0), 0.04, 1e-15);
    EXPECT_EQ(regimes::validity_metric(0.0, 10.0, 0.3), 0.0);
    const bath::BathKernel free(bath::SpectralDensity{0.0, 3.0, 10.0});
    EXPECT_EQ(regimes::validity_metric({1.0, 3.0}, free), 0.0);
    const bath::BathKernel ohmic(bath::SpectralDensity{1.0, 1.0, 10.0});
    EXPECT_NEAR(regimes::validity_metric({1.0, 2.0}, ohmic), 0.04, 1e-15);
}

TEST(Validity, Monotonicity) {
    double prev = -1.0;
    for (double d = 0.0; d < 5.0; d += 0.5) {
        const double v = regimes::validity_metric(d, 10.0, 0.6);
        EXPECT_GE(v, prev);
        prev = v;
    }
    prev = 2.0;
    for (double b = 0.0; b <= 1.0; b += 0.1) {
        const double v = regimes::validity_metric(1.0, 10.0, b);
        EXPECT_LE(v, prev);
        prev = v;
    }
}

TEST(SampleCurve, NoTunnellingGivesFlatZeroCurve) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    const auto c = regimes::sample_curve(survival::SurvivalMode::Full, {1.0, 0.0}, k, {0.05, 3.0, 20});
    ASSERT_EQ(c.tau.size(), 20u);
    for (double g : c.gamma) EXPECT_EQ(g, 0.0);
    EXPECT_TRUE(c.gaps.empty());
    const auto r = regimes::classify(c);
    EXPECT_TRUE(r.crossovers.empty());
}

TEST(SampleCurve, ThreadedEqualsSerial) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    const regimes::TauGrid grid{0.05, 3.0, 16};
    const auto a = regimes::sample_curve(survival::SurvivalMode::Full, {1.0, 0.2}, k, grid, {}, 1);
    const auto b = regimes::sample_curve(survival::SurvivalMode::Full, {1.0, 0.2}, k, grid, {}, 4);
    EXPECT_EQ(a.gamma, b.gamma);
    EXPECT_EQ(a.tau, b.tau);
}

TEST(SampleCurve, FailuresBecomeGaps) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    const auto c = regimes::sample_curve(survival::SurvivalMode::SmallDelta, {0.25, 1.0}, k, {0.05, 5.0, 50});
    EXPECT_FALSE(c.gaps.empty());
    EXPECT_EQ(c.tau.size() + c.gaps.size(), 50u);
    for (double g : c.gamma) EXPECT_TRUE(std::isfinite(g));
}

TEST(SampleCurve, AllPointsFailingThrows) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 1.0, 10.0});
    EXPECT_THROW(regimes::sample_curve(survival::SurvivalMode::Full, {0.0, 1.0}, k, {0.1, 1.0, 5}), Error);
}
