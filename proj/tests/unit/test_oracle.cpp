#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/oracle.hpp"

using namespace zeno;

namespace {

const bath::DiscreteBath kTwoModes({{1.0, 0.3}, {3.0, 0.6}});

}  // namespace

TEST(Discretize, MidpointRule) {
    const bath::SpectralDensity j{1.0, 3.0, 10.0};
    const auto one = oracle::discretize_bath(j, 1, 8.0);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_DOUBLE_EQ(one.modes()[0].omega, 4.0);
    EXPECT_NEAR(one.modes()[0].g * one.modes()[0].g, j(4.0) * 8.0, 1e-14);
    const auto free = oracle::discretize_bath({0.0, 3.0, 10.0}, 5, 10.0);
    for (const auto& m : free.modes()) EXPECT_EQ(m.g, 0.0);
    EXPECT_THROW(oracle::discretize_bath(j, 0, 1.0), DomainError);
}

TEST(Discretize, ReproducesContinuumCoherence) {
    const auto db = oracle::discretize_bath({1.0, 3.0, 10.0}, 400, 80.0);
    double phi0 = 0.0;
    for (const auto& m : db.modes()) phi0 += m.g * m.g / (m.omega * m.omega);
    EXPECT_NEAR(phi0, 1.0, 0.01);
}

TEST(LabHamiltonian, HandWrittenSpectrum) {
    const oracle::TruncatedBathSpec spec{bath::DiscreteBath({{1.0, 0.0}}), 3};
    const auto h = oracle::build_lab_hamiltonian({1.0, 0.0}, spec);
    Eigen::VectorXd diag = h.diagonal();
    std::vector<double> ev(diag.data(), diag.data() + diag.size());
    std::sort(ev.begin(), ev.end());
    EXPECT_EQ(ev, (std::vector<double>{-0.5, 0.5, 0.5, 1.5, 1.5, 2.5}));
    EXPECT_EQ((h - Eigen::MatrixXd(h.diagonal().asDiagonal())).norm(), 0.0);
}

TEST(LabHamiltonian, HermitianAndCommuting) {
    const oracle::TruncatedBathSpec spec{kTwoModes, 4};
    const auto h = oracle::build_lab_hamiltonian({0.7, 0.3}, spec);
    EXPECT_EQ((h - h.transpose()).cwiseAbs().maxCoeff(), 0.0);
    const auto h0 = oracle::build_lab_hamiltonian({0.7, 0.0}, spec);
    const Eigen::Index n = h0.rows();
    Eigen::VectorXd sz = Eigen::VectorXd::Ones(n);
    sz.tail(n / 2).setConstant(-1.0);
    const Eigen::MatrixXd z = sz.asDiagonal();
    EXPECT_EQ((h0 * z - z * h0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(LabHamiltonian, Budget) {
    const oracle::TruncatedBathSpec big{oracle::discretize_bath({1.0, 3.0, 10.0}, 6, 30.0), 6};
    EXPECT_THROW(oracle::build_lab_hamiltonian({1.0, 0.1}, big), BudgetExceeded);
    EXPECT_THROW((oracle::TruncatedBathSpec{kTwoModes, 2}.validate()), DomainError);
}

TEST(InitialState, CoherentFactors) {
    const auto free = oracle::initial_state_lab({1.0, 0.1}, {bath::DiscreteBath({{1.0, 0.0}}), 4});
    EXPECT_EQ(free.vector(0), 1.0);
    EXPECT_EQ(free.vector.squaredNorm(), 1.0);

    // |⟨0|coherent(−α/2)⟩|² = e^{−α²/4} before renormalization.
    const double g = 0.4, w = 1.0, alpha = g / w;
    const auto st = oracle::initial_state_lab({1.0, 0.1}, {bath::DiscreteBath({{w, g}}), 12});
    EXPECT_NEAR(st.vector(0) * st.vector(0), std::exp(-alpha * alpha / 4.0), 1e-14);
    EXPECT_LT(st.vector(1), 0.0);  // displacement −α/2
    EXPECT_NEAR(st.vector.squaredNorm(), 1.0, 1e-14);
    EXPECT_NEAR(st.density().trace(), 1.0, 1e-14);
    EXPECT_EQ(st.vector.tail(st.vector.size() / 2).norm(), 0.0);
}

TEST(InitialState, TruncationLossIsRejected) {
    EXPECT_THROW(oracle::initial_state_lab({1.0, 0.1}, {bath::DiscreteBath({{1.0, 4.0}}), 3}), TruncationError);
}

TEST(ExactSurvival, ConservedWithoutTunnelling) {
    const oracle::ExactPropagator p({1.0, 0.0}, {kTwoModes, 6});
    for (double t : {0.0, 0.5, 3.3, 10.0}) EXPECT_NEAR(p.survival(t), 1.0, 1e-12);
    EXPECT_NEAR(oracle::exact_survival({1.0, 0.3}, {kTwoModes, 5}, 0.0), 1.0, 1e-13);
}

TEST(ExactSurvival, Unitarity) {
    const oracle::ExactPropagator p({1.0, 0.3}, {kTwoModes, 6});
    for (double t : {0.7, 4.0}) EXPECT_NEAR(p.evolve(t).squaredNorm(), 1.0, 1e-10);
}

TEST(ExactSurvival, ConvergedInFockCutoff) {
    const polaron::SystemParams sys{1.0, 0.02};
    const oracle::ExactPropagator a(sys, {kTwoModes, 6}), b(sys, {kTwoModes, 8});
    for (double t : {1.0, 2.5, 5.0}) {
        EXPECT_NEAR(a.survival(t), b.survival(t), 1e-8);
        EXPECT_NEAR(a.survival(t, true), b.survival(t, true), 1e-8);
    }
}

TEST(ExactSurvival, FreeTwoLevelRabi) {
    // No bath: s = 1 − (Δ/Ω)² sin²(Ωτ/2); removing the free evolution restores s = 1.
    const polaron::SystemParams sys{0.6, 0.8};
    const oracle::ExactPropagator p(sys, {bath::DiscreteBath({{1.0, 0.0}}), 3});
    for (double t : {0.3, 1.9, 4.4}) {
        const double sn = std::sin(0.5 * t);
        EXPECT_NEAR(p.survival(t), 1.0 - 0.64 * sn * sn, 1e-12);
        EXPECT_NEAR(p.survival(t, true), 1.0, 1e-12);
    }
}
