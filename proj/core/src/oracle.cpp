#include "zeno/oracle.hpp"

#include <cmath>
#include <complex>

#include "zeno/errors.hpp"

namespace zeno::oracle {

namespace {

constexpr double kMaxTruncationLoss = 1e-6;

}  // namespace

bath::DiscreteBath discretize_bath(const bath::SpectralDensity& density, std::size_t modes, double omega_max) {
    density.validate();
    if (modes == 0) throw DomainError("discretize_bath: need at least one mode");
    if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw DomainError("discretize_bath: omega_max must be > 0");
    const double dw = omega_max / static_cast<double>(modes);
    std::vector<bath::BathMode> out;
    out.reserve(modes);
    for (std::size_t k = 0; k < modes; ++k) {
        const double w = (static_cast<double>(k) + 0.5) * dw;
        out.push_back({w, std::sqrt(density(w) * dw)});
    }
    return bath::DiscreteBath(std::move(out));
}

std::size_t TruncatedBathSpec::dimension() const {
    validate();
    std::size_t dim = 2;
    for (std::size_t k = 0; k < bath.size(); ++k) {
        if (dim > budget / n_max) throw BudgetExceeded("oracle: Hilbert-space dimension exceeds the budget");
        dim *= n_max;
    }
    if (dim > budget) throw BudgetExceeded("oracle: Hilbert-space dimension exceeds the budget");
    return dim;
}

void TruncatedBathSpec::validate() const {
    if (n_max < 3) throw DomainError("oracle: n_max must be >= 3");
}

Eigen::Matrix2d lab_system_hamiltonian(const polaron::SystemParams& sys) {
    Eigen::Matrix2d h;
    h << 0.5 * sys.epsilon, 0.5 * sys.delta, 0.5 * sys.delta, -0.5 * sys.epsilon;
    return h;
}

Eigen::MatrixXd build_lab_hamiltonian(const polaron::SystemParams& sys, const TruncatedBathSpec& spec) {
    sys.validate();
    const std::size_t dim = spec.dimension();
    const std::size_t db = dim / 2;
    const auto& modes = spec.bath.modes();
    const std::size_t nm = spec.n_max;
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);

    // stride of mode k in the bath index
    std::vector<std::size_t> stride(modes.size(), 1);
    for (std::size_t k = modes.size(); k-- > 1;) stride[k - 1] = stride[k] * nm;

    for (std::size_t sigma = 0; sigma < 2; ++sigma) {
        const double sz = sigma == 0 ? 1.0 : -1.0;
        const std::size_t off = sigma * db;
        for (std::size_t j = 0; j < db; ++j) {
            double diag = 0.5 * sz * sys.epsilon;
            for (std::size_t k = 0; k < modes.size(); ++k) {
                const std::size_t occ = (j / stride[k]) % nm;
                diag += modes[k].omega * static_cast<double>(occ);
                if (occ + 1 < nm) {
                    const double amp = 0.5 * sz * modes[k].g * std::sqrt(static_cast<double>(occ + 1));
                    const auto r = static_cast<Eigen::Index>(off + j);
                    const auto c = static_cast<Eigen::Index>(off + j + stride[k]);
                    h(r, c) += amp;
                    h(c, r) += amp;
                }
            }
            const auto r = static_cast<Eigen::Index>(off + j);
            h(r, r) = diag;
        }
    }
    for (std::size_t j = 0; j < db; ++j) {
        const auto up = static_cast<Eigen::Index>(j);
        const auto down = static_cast<Eigen::Index>(db + j);
        h(up, down) = 0.5 * sys.delta;
        h(down, up) = 0.5 * sys.delta;
    }
    return h;
}

InitialState initial_state_lab(const polaron::SystemParams& sys, const TruncatedBathSpec& spec) {
    sys.validate();
    const std::size_t dim = spec.dimension();
    const std::size_t nm = spec.n_max;
    InitialState out;
    Eigen::VectorXd bath_state = Eigen::VectorXd::Ones(1);
    for (const auto& mode : spec.bath.modes()) {
        const double a = -0.5 * mode.alpha();
        Eigen::VectorXd c(static_cast<Eigen::Index>(nm));
        double term = std::exp(-0.5 * a * a);
        for (std::size_t k = 0; k < nm; ++k) {
            c(static_cast<Eigen::Index>(k)) = term;
            term *= a / std::sqrt(static_cast<double>(k + 1));
        }
        const double kept = c.squaredNorm();
        const double loss = 1.0 - kept;
        out.max_truncation_loss = std::max(out.max_truncation_loss, loss);
        if (loss > kMaxTruncationLoss)
            throw TruncationError("oracle: Fock truncation drops more than 1e-6 of a coherent state; raise n_max");
        c /= std::sqrt(kept);
        Eigen::VectorXd next(bath_state.size() * c.size());
        for (Eigen::Index i = 0; i < bath_state.size(); ++i) next.segment(i * c.size(), c.size()) = bath_state(i) * c;
        bath_state = std::move(next);
    }
    out.vector = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    out.vector.head(bath_state.size()) = bath_state;
    return out;
}

ExactPropagator::ExactPropagator(const polaron::SystemParams& sys, const TruncatedBathSpec& spec)
    : sys_(sys), initial_(initial_state_lab(sys, spec)) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_lab_hamiltonian(sys, spec));
    if (solver.info() != Eigen::Success) throw Error("oracle: eigendecomposition failed");
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
    overlaps_ = vectors_.transpose() * initial_.vector;
}

Eigen::VectorXcd ExactPropagator::evolve(double tau) const {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("oracle: tau must be finite and >= 0");
    Eigen::VectorXcd coeff(values_.size());
    for (Eigen::Index i = 0; i < values_.size(); ++i)
        coeff(i) = std::polar(1.0, -values_(i) * tau) * overlaps_(i);
    return vectors_.cast<std::complex<double>>() * coeff;
}

double ExactPropagator::survival(double tau, bool removed) const {
    const Eigen::VectorXcd psi = evolve(tau);
    const Eigen::Index db = psi.size() / 2;
    if (!removed) return psi.head(db).squaredNorm();
    const double w = std::hypot(sys_.epsilon, sys_.delta);
    if (w == 0.0) return psi.head(db).squaredNorm();
    // e^{+iH_SL τ} = cos(wτ/2) + i sin(wτ/2)(n·σ)
    const double c = std::cos(0.5 * w * tau);
    const double s = std::sin(0.5 * w * tau);
    const std::complex<double> u00(c, s * sys_.epsilon / w);
    const std::complex<double> u01(0.0, s * sys_.delta / w);
    const Eigen::VectorXcd up = u00 * psi.head(db) + u01 * psi.tail(db);
    return up.squaredNorm();
}

double exact_survival(const polaron::SystemParams& sys, const TruncatedBathSpec& spec, double tau, bool removed) {
    return ExactPropagator(sys, spec).survival(tau, removed);
}

}  // namespace zeno::oracle
