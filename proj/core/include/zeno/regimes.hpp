// Decay-rate curves Γ(τ) and their Zeno / anti-Zeno classification.
//
// Convention: on an interval where Γ grows with τ (Γ falls as measurements get
// more frequent) the label is Zeno; where Γ falls with τ it is AntiZeno.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/bath.hpp"
#include "zeno/polaron.hpp"
#include "zeno/survival.hpp"
#include "zeno/validity.hpp"

namespace zeno::regimes {

enum class GridSpacing { Linear, Geometric };

std::string_view to_string(GridSpacing spacing);
std::optional<GridSpacing> parse_spacing(std::string_view name);

struct TauGrid {
    double tau_min{0.05};
    double tau_max{3.0};
    std::size_t points{50};
    GridSpacing spacing{GridSpacing::Geometric};

    void validate() const;  // 0 < tau_min < tau_max, points ≥ 2
    std::vector<double> values() const;
};

struct Gap {
    double tau;
    std::string reason;
};

struct DecayCurve {
    survival::SurvivalMode mode{survival::SurvivalMode::Full};
    polaron::SystemParams system{};
    std::vector<double> tau;    // strictly increasing, points where Γ is defined
    std::vector<double> gamma;  // finite, aligned with tau
    std::vector<double> s;
    std::vector<double> error;  // quadrature error estimate on s
    std::vector<Gap> gaps;      // grid points where the rate could not be formed
    double validity{0.0};
};

// Evaluates Γ on the grid, `threads` workers (0 → hardware concurrency).
// Out-of-regime points become gaps; throws Error if every point fails.
DecayCurve sample_curve(const survival::SurvivalEvaluator& evaluator, survival::SurvivalMode mode,
                        const std::vector<double>& taus, unsigned threads = 1);
DecayCurve sample_curve(survival::SurvivalMode mode, const polaron::SystemParams& sys,
                        const bath::BathKernel& kernel, const TauGrid& grid,
                        const survival::SurvivalOptions& opts = {}, unsigned threads = 1);

enum class Regime { Zeno, AntiZeno };

std::string_view to_string(Regime regime);

struct Segment {
    double tau_begin;
    double tau_end;
    Regime regime;
};

struct Crossover {
    double tau;  // vertex of the local quadratic through the extremum
    Regime from;
    Regime to;
};

struct RegimeReport {
    std::vector<Segment> segments;
    std::vector<Crossover> crossovers;

    Regime regime_at(double tau) const;
};

// Slopes with |ΔΓ| ≤ noise_floor·max|Γ| do not register a sign change.
inline constexpr double kSlopeNoiseFloor = 1e-6;

RegimeReport classify(const std::vector<double>& tau, const std::vector<double>& gamma,
                      double noise_floor = kSlopeNoiseFloor);
RegimeReport classify(const DecayCurve& curve, double noise_floor = kSlopeNoiseFloor);

}  // namespace zeno::regimes
