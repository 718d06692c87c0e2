#include <gtest/gtest.h>

#include "zeno/errors.hpp"
#include "zeno/kernel_table.hpp"

using namespace zeno;

TEST(KernelTable, MatchesDirectQuadrature) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    const bath::KernelTable table(k, 6.0);
    EXPECT_GT(table.panel_count(), 0u);
    for (double t = -6.0; t <= 6.0; t += 0.37) EXPECT_NEAR(std::abs(table.psi(t) - k.phi_shifted(t)), 0.0, 1e-9) << t;
}

TEST(KernelTable, OhmicKernel) {
    const bath::BathKernel k(bath::SpectralDensity{2.0, 1.0, 10.0});
    const bath::KernelTable table(k, 10.0);
    for (double t : {0.0, 0.013, 0.4, 9.99}) EXPECT_NEAR(std::abs(table.psi(t) - k.phi_shifted(t)), 0.0, 1e-9) << t;
}

TEST(KernelTable, RangeIsEnforced) {
    const bath::BathKernel k(bath::SpectralDensity{1.0, 3.0, 10.0});
    const bath::KernelTable table(k, 1.0);
    EXPECT_THROW(table.psi(1.5), DomainError);
    EXPECT_THROW(bath::KernelTable(k, -1.0), DomainError);
}

TEST(KernelTable, DiscreteKernelPassesThrough) {
    const bath::BathKernel k(bath::DiscreteBath({{1.0, 0.3}}));
    const bath::KernelTable table(k, 2.0);
    EXPECT_EQ(table.panel_count(), 0u);
    EXPECT_EQ(table.psi(0.7), k.phi_shifted(0.7));
}
