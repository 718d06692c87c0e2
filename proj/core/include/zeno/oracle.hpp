// Exact lab-frame dynamics for a few discrete bath modes with
// truncated Fock spaces. Zero temperature only.
//
//   H_L = (ε/2)σ_z + (Δ/2)σ_x + Σ_k ω_k b_k†b_k + (σ_z/2) Σ_k g_k (b_k + b_k†)
//
// Basis ordering: system index major, then modes in order (mode 0 slowest).

#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "zeno/bath.hpp"
#include "zeno/polaron.hpp"

namespace zeno::oracle {

inline constexpr std::size_t kDefaultDimensionBudget = 4096;

// Midpoint rule ω_k = (k − ½)Δω, Δω = omega_max/K, g_k = sqrt(J(ω_k)Δω).
bath::DiscreteBath discretize_bath(const bath::SpectralDensity& density, std::size_t modes, double omega_max);

struct TruncatedBathSpec {
    bath::DiscreteBath bath;
    std::size_t n_max{6};  // Fock levels 0..n_max−1 per mode
    std::size_t budget{kDefaultDimensionBudget};

    std::size_t dimension() const;  // 2·n_max^K; throws BudgetExceeded
    void validate() const;
};

Eigen::MatrixXd build_lab_hamiltonian(const polaron::SystemParams& sys, const TruncatedBathSpec& spec);
Eigen::Matrix2d lab_system_hamiltonian(const polaron::SystemParams& sys);

// |↑⟩ ⊗ Π_k |coherent(−α_k/2)⟩, each factor renormalized after truncation.
// Throws TruncationError when a factor loses more than 1e−6 of its weight.
struct InitialState {
    Eigen::VectorXd vector;
    double max_truncation_loss{0.0};

    Eigen::MatrixXd density() const { return vector * vector.transpose(); }
};

InitialState initial_state_lab(const polaron::SystemParams& sys, const TruncatedBathSpec& spec);

// Eigendecomposition of H_L, reusable across τ. Const members are thread-safe.
class ExactPropagator {
public:
    ExactPropagator(const polaron::SystemParams& sys, const TruncatedBathSpec& spec);

    // ‖P_↑ e^{−iH_L τ} ψ₀‖²; with removed, e^{+iH_SL τ} acts on the system first.
    double survival(double tau, bool removed = false) const;
    Eigen::VectorXcd evolve(double tau) const;

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(values_.size()); }
    const InitialState& initial_state() const noexcept { return initial_; }

private:
    polaron::SystemParams sys_;
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
    Eigen::VectorXd overlaps_;  // V^T ψ₀
    InitialState initial_;
};

double exact_survival(const polaron::SystemParams& sys, const TruncatedBathSpec& spec, double tau,
                      bool removed = false);

}  // namespace zeno::oracle
