// Validity metric (Δ/ω_c)²(1 − B⁴) of the polaron-frame
// second-order treatment.

#pragma once

#include "zeno/bath.hpp"
#include "zeno/polaron.hpp"

namespace zeno::regimes {

// Metric values at or above this trigger a warning (never an error unless asked).
inline constexpr double kValidityWarningThreshold = 0.1;

double validity_metric(double delta, double omega_c, double b_factor);
double validity_metric(const polaron::SystemParams& sys, const bath::BathKernel& kernel);

}  // namespace zeno::regimes
