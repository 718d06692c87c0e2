// Polaron-frame system parameters and the time-dependent
// coefficients of the free system evolution U_S(t) = exp(−i H_S t),
// H_S = (ε/2)σ_z + (Δ_r/2)σ_x, Δ_r = Δ·B, Ω_r = sqrt(ε² + Δ_r²).

#pragma once

#include <Eigen/Dense>

#include "zeno/bath.hpp"

namespace zeno::polaron {

struct SystemParams {
    double epsilon{1.0};  // bias ε
    double delta{0.0};    // bare tunnelling Δ ≥ 0

    void validate() const;
};

struct PolaronParams {
    double epsilon{1.0};
    double delta_r{0.0};   // Δ_r = Δ·B
    double omega_r{1.0};   // Ω_r
    double b_factor{1.0};  // B
};

// Throws DegenerateSystem when ε = Δ_r = 0.
PolaronParams renormalize(const SystemParams& sys, const bath::BathKernel& kernel);
PolaronParams renormalize(const SystemParams& sys, double b_factor);

// Same bias with Δ_r → 0 (Ω_r → |ε|): the coefficient set of the small-delta
// frame, where Δ only enters the interaction. Throws DegenerateSystem for ε = 0.
PolaronParams without_renormalized_tunnelling(const PolaronParams& p);

struct FGH {
    double f{1.0};
    double g{0.0};
    double h{0.0};
};

FGH fgh(const PolaronParams& p, double tau);

// U_S†(t) σ_x U_S(t) = a_x σ_x + a_y σ_y + a_z σ_z, and likewise b for σ_y.
struct RotationCoefficients {
    double ax{1.0}, ay{0.0}, az{0.0};
    double bx{0.0}, by{1.0}, bz{0.0};
};

RotationCoefficients rot_coeffs(const PolaronParams& p, double t);

Eigen::Matrix2cd u_s_matrix(const PolaronParams& p, double tau);

// Pauli matrices in the {|↑⟩, |↓⟩} basis, σ_z|↑⟩ = |↑⟩.
Eigen::Matrix2cd sigma_x();
Eigen::Matrix2cd sigma_y();
Eigen::Matrix2cd sigma_z();

}  // namespace zeno::polaron
