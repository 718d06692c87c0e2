#include "zeno/regimes.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <thread>

#include "zeno/errors.hpp"

namespace zeno::regimes {

std::string_view to_string(GridSpacing spacing) {
    return spacing == GridSpacing::Linear ? "linear" : "geometric";
}

std::optional<GridSpacing> parse_spacing(std::string_view name) {
    std::string n;
    for (char c : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (n == "linear") return GridSpacing::Linear;
    if (n == "geometric" || n == "log") return GridSpacing::Geometric;
    return std::nullopt;
}

void TauGrid::validate() const {
    if (!(tau_min > 0.0) || !(tau_max > tau_min) || !std::isfinite(tau_max))
        throw DomainError("tau grid: need 0 < tau_min < tau_max");
    if (points < 2) throw DomainError("tau grid: need at least 2 points");
}

std::vector<double> TauGrid::values() const {
    validate();
    std::vector<double> out(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double x = static_cast<double>(i) / last;
        out[i] = spacing == GridSpacing::Linear ? tau_min + (tau_max - tau_min) * x
                                                : tau_min * std::pow(tau_max / tau_min, x);
    }
    out.front() = tau_min;
    out.back() = tau_max;
    return out;
}

DecayCurve sample_curve(const survival::SurvivalEvaluator& evaluator, survival::SurvivalMode mode,
                        const std::vector<double>& taus, unsigned threads) {
    if (taus.empty()) throw DomainError("sample_curve: empty tau grid");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0)) throw DomainError("sample_curve: tau values must be > 0");
        if (i > 0 && !(taus[i] > taus[i - 1])) throw DomainError("sample_curve: tau grid must be strictly increasing");
    }

    struct Point {
        survival::SurvivalResult result;
        std::string failure;
    };
    std::vector<Point> points(taus.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < taus.size(); i = next++) {
            try {
                points[i].result = evaluator.evaluate(mode, taus[i]);
                if (!points[i].result.in_regime) points[i].failure = "survival probability outside (0, 1]";
            } catch (const Error& e) {
                points[i].failure = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, taus.size()));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
    }

    DecayCurve curve;
    curve.mode = mode;
    curve.system = evaluator.system();
    curve.validity = evaluator.validity();
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!points[i].failure.empty()) {
            curve.gaps.push_back({taus[i], points[i].failure});
            continue;
        }
        curve.tau.push_back(taus[i]);
        curve.gamma.push_back(points[i].result.gamma);
        curve.s.push_back(points[i].result.s);
        curve.error.push_back(points[i].result.diagnostics.error_estimate);
    }
    if (curve.tau.empty()) throw Error("sample_curve: every grid point failed (first: " + curve.gaps.front().reason + ")");
    return curve;
}

DecayCurve sample_curve(survival::SurvivalMode mode, const polaron::SystemParams& sys,
                        const bath::BathKernel& kernel, const TauGrid& grid, const survival::SurvivalOptions& opts,
                        unsigned threads) {
    const auto taus = grid.values();
    const survival::SurvivalEvaluator evaluator(sys, kernel, grid.tau_max, opts);
    return sample_curve(evaluator, mode, taus, threads);
}

std::string_view to_string(Regime regime) { return regime == Regime::Zeno ? "ZENO" : "ANTI_ZENO"; }

Regime RegimeReport::regime_at(double tau) const {
    for (const auto& seg : segments)
        if (tau <= seg.tau_end) return seg.regime;
    return segments.back().regime;
}

namespace {

double quadratic_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double a = (d12 - d01) / (x2 - x0);
    if (a == 0.0) return x1;
    const double v = 0.5 * (x0 + x1) - d01 / (2.0 * a);
    return std::clamp(v, x0, x2);
}

}  // namespace

RegimeReport classify(const std::vector<double>& tau, const std::vector<double>& gamma, double noise_floor) {
    const std::size_t n = tau.size();
    if (gamma.size() != n) throw DomainError("classify: tau and gamma differ in length");
    if (n < 3) throw DomainError("classify: need at least 3 points");
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(gamma[i])) throw DomainError("classify: gamma must be finite");
        if (i > 0 && !(tau[i] > tau[i - 1])) throw DomainError("classify: tau must be strictly increasing");
        scale = std::max(scale, std::abs(gamma[i]));
    }
    const double floor = noise_floor * scale;

    auto sign_of = [&](std::size_t k) {
        const double d = gamma[k + 1] - gamma[k];
        return d > floor ? 1 : (d < -floor ? -1 : 0);
    };

    RegimeReport report;
    int current = 0;
    std::size_t last_significant = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const int sg = sign_of(k);
        if (sg == 0) continue;
        if (current == 0) {
            current = sg;
            last_significant = k;
            continue;
        }
        if (sg != current) {
            // Extremum among the points joining the two sloped intervals.
            std::size_t m = last_significant + 1;
            for (std::size_t i = last_significant + 1; i <= k; ++i)
                if ((current > 0 && gamma[i] > gamma[m]) || (current < 0 && gamma[i] < gamma[m])) m = i;
            const double at = quadratic_vertex(tau[m - 1], gamma[m - 1], tau[m], gamma[m], tau[m + 1], gamma[m + 1]);
            const Regime from = current > 0 ? Regime::Zeno : Regime::AntiZeno;
            const Regime to = sg > 0 ? Regime::Zeno : Regime::AntiZeno;
            report.crossovers.push_back({at, from, to});
            current = sg;
        }
        last_significant = k;
    }

    // A curve without any resolvable slope is reported as one Zeno segment.
    Regime label = Regime::Zeno;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const int sg = sign_of(k);
        if (sg != 0) {
            label = sg > 0 ? Regime::Zeno : Regime::AntiZeno;
            break;
        }
    }
    double begin = tau.front();
    for (const auto& c : report.crossovers) {
        report.segments.push_back({begin, c.tau, label});
        begin = c.tau;
        label = c.to;
    }
    report.segments.push_back({begin, tau.back(), label});
    return report;
}

RegimeReport classify(const DecayCurve& curve, double noise_floor) {
    return classify(curve.tau, curve.gamma, noise_floor);
}

}  // namespace zeno::regimes
