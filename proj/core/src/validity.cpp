#include "zeno/validity.hpp"

#include "zeno/errors.hpp"

namespace zeno::regimes {

double validity_metric(double delta, double omega_c, double b_factor) {
    if (!(omega_c > 0.0)) throw DomainError("validity metric needs omega_c > 0");
    const double ratio = delta / omega_c;
    const double b2 = b_factor * b_factor;
    return ratio * ratio * (1.0 - b2 * b2);
}

double validity_metric(const polaron::SystemParams& sys, const bath::BathKernel& kernel) {
    return validity_metric(sys.delta, kernel.cutoff_frequency(), kernel.coherence());
}

}  // namespace zeno::regimes
