#include "zeno/polaron.hpp"

#include <cmath>
#include <complex>

#include "zeno/errors.hpp"

namespace zeno::polaron {

void SystemParams::validate() const {
    if (!std::isfinite(epsilon)) throw DomainError("system: epsilon must be finite");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("system: delta must be finite and >= 0");
}

PolaronParams renormalize(const SystemParams& sys, double b_factor) {
    sys.validate();
    if (!(b_factor >= 0.0 && b_factor <= 1.0)) throw DomainError("coherence factor B must lie in [0, 1]");
    PolaronParams p;
    p.epsilon = sys.epsilon;
    p.b_factor = b_factor;
    p.delta_r = sys.delta * b_factor;
    p.omega_r = std::hypot(sys.epsilon, p.delta_r);
    if (p.omega_r == 0.0) throw DegenerateSystem("epsilon = Delta_r = 0: the polaron-frame system Hamiltonian vanishes");
    return p;
}

PolaronParams renormalize(const SystemParams& sys, const bath::BathKernel& kernel) {
    return renormalize(sys, kernel.coherence());
}

PolaronParams without_renormalized_tunnelling(const PolaronParams& p) {
    if (p.epsilon == 0.0) throw DegenerateSystem("small-delta coefficients need epsilon != 0");
    PolaronParams q = p;
    q.delta_r = 0.0;
    q.omega_r = std::abs(p.epsilon);
    return q;
}

FGH fgh(const PolaronParams& p, double tau) {
    const double w2 = p.omega_r * p.omega_r;
    const double s_half = std::sin(0.5 * p.omega_r * tau);
    const double c_half = std::cos(0.5 * p.omega_r * tau);
    const double s2 = s_half * s_half;
    FGH out;
    out.f = c_half * c_half + (p.epsilon * p.epsilon - p.delta_r * p.delta_r) / w2 * s2;
    out.g = -2.0 * p.epsilon * p.delta_r / w2 * s2;
    out.h = -p.delta_r / p.omega_r * std::sin(p.omega_r * tau);
    return out;
}

RotationCoefficients rot_coeffs(const PolaronParams& p, double t) {
    const double w = p.omega_r;
    const double s_half = std::sin(0.5 * w * t);
    const double s2 = s_half * s_half;
    const double s = std::sin(w * t);
    const double c = std::cos(w * t);
    const double e = p.epsilon / w;
    const double d = p.delta_r / w;
    RotationCoefficients r;
    r.ax = 1.0 - 2.0 * e * e * s2;
    r.ay = -e * s;
    r.az = 2.0 * e * d * s2;
    r.bx = e * s;
    r.by = c;
    r.bz = -d * s;
    return r;
}

Eigen::Matrix2cd sigma_x() {
    Eigen::Matrix2cd m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Eigen::Matrix2cd sigma_y() {
    using namespace std::complex_literals;
    Eigen::Matrix2cd m;
    m << 0.0, -1i, 1i, 0.0;
    return m;
}

Eigen::Matrix2cd sigma_z() {
    Eigen::Matrix2cd m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Eigen::Matrix2cd u_s_matrix(const PolaronParams& p, double tau) {
    using namespace std::complex_literals;
    const double c = std::cos(0.5 * p.omega_r * tau);
    const double s = std::sin(0.5 * p.omega_r * tau);
    const Eigen::Matrix2cd axis = (p.delta_r / p.omega_r) * sigma_x() + (p.epsilon / p.omega_r) * sigma_z();
    return c * Eigen::Matrix2cd::Identity() - 1i * s * axis;
}

}  // namespace zeno::polaron
