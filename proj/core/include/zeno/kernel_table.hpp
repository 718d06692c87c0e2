// Piecewise Chebyshev interpolant of ψ(t) = φ(t) − φ_R(0)
// on [-t_max, t_max], built once per kernel so the double integrals in the
// survival module do not re-run the semi-infinite quadrature at every node.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "zeno/bath.hpp"

namespace zeno::bath {

class KernelTable {
public:
    static constexpr std::size_t kNodes = 24;

    // abs_tol ≤ 0 selects the kernel's own quadrature tolerance. Panels are
    // bisected until the last three Chebyshev coefficients fall below abs_tol.
    KernelTable(const BathKernel& kernel, double t_max, double abs_tol = 0.0);

    // ψ(t) for |t| ≤ t_max (negative t via ψ(−t) = conj ψ(t)). Discrete
    // kernels are evaluated directly.
    std::complex<double> psi(double t) const;

    const BathKernel& kernel() const noexcept { return kernel_; }
    double t_max() const noexcept { return t_max_; }
    std::size_t panel_count() const noexcept { return panels_.size(); }

private:
    struct Panel {
        double a;
        double b;
        std::array<std::complex<double>, kNodes> coeffs;
    };

    BathKernel kernel_;
    double t_max_;
    std::vector<Panel> panels_;
};

}  // namespace zeno::bath
