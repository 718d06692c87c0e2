#include <gtest/gtest.h>

#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/polaron.hpp"

using namespace zeno;

namespace {

struct Vec3 {
    double x, y, z;
};

// Pauli components of a traceless Hermitian 2×2 matrix.
Vec3 components(const Eigen::Matrix2cd& m) {
    return {0.5 * (polaron::sigma_x() * m).trace().real(), 0.5 * (polaron::sigma_y() * m).trace().real(),
            0.5 * (polaron::sigma_z() * m).trace().real()};
}

Eigen::Matrix2cd rotate(const polaron::PolaronParams& p, double t, const Eigen::Matrix2cd& s) {
    const auto u = polaron::u_s_matrix(p, t);
    return u.adjoint() * s * u;
}

const polaron::PolaronParams kCases[] = {
    polaron::renormalize({1.0, 0.2}, 0.6),
    polaron::renormalize({0.25, 1.0}, std::exp(-0.5)),
    polaron::renormalize({-0.7, 2.0}, 0.9),
    polaron::renormalize({0.0, 1.0}, 0.5),
};

}  // namespace

TEST(Polaron, Renormalization) {
    const auto p = polaron::renormalize({0.25, 1.0}, 0.5);
    EXPECT_DOUBLE_EQ(p.delta_r, 0.5);
    EXPECT_DOUBLE_EQ(p.omega_r, std::hypot(0.25, 0.5));
    EXPECT_THROW(polaron::renormalize({0.0, 1.0}, 0.0), DegenerateSystem);
    EXPECT_THROW(polaron::renormalize({1.0, -1.0}, 0.5), DomainError);
    EXPECT_THROW(polaron::renormalize({1.0, 1.0}, 1.5), DomainError);
}

TEST(Polaron, SmallDeltaCoefficients) {
    const auto q = polaron::without_renormalized_tunnelling(polaron::renormalize({-0.5, 1.0}, 0.5));
    EXPECT_EQ(q.delta_r, 0.0);
    EXPECT_EQ(q.omega_r, 0.5);
    EXPECT_THROW(polaron::without_renormalized_tunnelling(polaron::renormalize({0.0, 1.0}, 0.5)), DegenerateSystem);
}

TEST(Polaron, UnitaryIsUnitary) {
    for (const auto& p : kCases)
        for (double t : {0.0, 0.3, 2.7})
            EXPECT_NEAR((polaron::u_s_matrix(p, t).adjoint() * polaron::u_s_matrix(p, t) - Eigen::Matrix2cd::Identity()).norm(),
                        0.0, 1e-14);
}

TEST(Polaron, RotationCoefficientsMatchExplicitUnitary) {
    for (const auto& p : kCases)
        for (double t : {0.0, 0.1, 0.77, 3.0, 12.5}) {
            const auto r = polaron::rot_coeffs(p, t);
            const auto a = components(rotate(p, t, polaron::sigma_x()));
            const auto b = components(rotate(p, t, polaron::sigma_y()));
            EXPECT_NEAR(r.ax, a.x, 1e-12);
            EXPECT_NEAR(r.ay, a.y, 1e-12);
            EXPECT_NEAR(r.az, a.z, 1e-12);
            EXPECT_NEAR(r.bx, b.x, 1e-12);
            EXPECT_NEAR(r.by, b.y, 1e-12);
            EXPECT_NEAR(r.bz, b.z, 1e-12);
        }
}

TEST(Polaron, RotationCoefficientsOrthonormal) {
    for (const auto& p : kCases)
        for (double t : {0.05, 1.3, 7.0}) {
            const auto r = polaron::rot_coeffs(p, t);
            EXPECT_NEAR(r.ax * r.ax + r.ay * r.ay + r.az * r.az, 1.0, 1e-12);
            EXPECT_NEAR(r.bx * r.bx + r.by * r.by + r.bz * r.bz, 1.0, 1e-12);
            EXPECT_NEAR(r.ax * r.bx + r.ay * r.by + r.az * r.bz, 0.0, 1e-12);
        }
}

// U†σ_zU = f σ_z − g σ_x − h σ_y
TEST(Polaron, FghFromRotatedSigmaZ) {
    for (const auto& p : kCases)
        for (double tau : {0.0, 0.4, 2.2, 9.0}) {
            const auto [f, g, h] = polaron::fgh(p, tau);
            const auto c = components(rotate(p, tau, polaron::sigma_z()));
            EXPECT_NEAR(f, c.z, 1e-12);
            EXPECT_NEAR(g, -c.x, 1e-12);
            EXPECT_NEAR(h, -c.y, 1e-12);
            EXPECT_NEAR(f * f + g * g + h * h, 1.0, 1e-12);
        }
}
