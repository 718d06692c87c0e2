#include "zeno/cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "zeno/errors.hpp"
#include "zeno/oracle.hpp"
#include "zeno/version.hpp"

namespace zeno::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shortest form that parses back to the same double.
std::string exact(double v) {
    char buf[40];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + exact(values[i]);
    return out;
}

struct Failure {
    std::string code;
    std::string message;
    int exit;
};

// Runs fn, mapping library exceptions onto row error codes.
template <class F>
std::optional<Failure> guarded(F&& fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const OutOfRegime& e) {
        return Failure{"out_of_regime", e.what(), exit_code::kOutOfRegime};
    } catch (const QuadratureFailure& e) {
        return Failure{"quadrature_failure", e.what(), exit_code::kQuadrature};
    } catch (const DegenerateSystem& e) {
        return Failure{"degenerate_system", e.what(), exit_code::kOther};
    } catch (const DomainError& e) {
        return Failure{"domain_error", e.what(), exit_code::kOther};
    } catch (const Error& e) {
        return Failure{"error", e.what(), exit_code::kOther};
    }
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
    };
    if (threads <= 1) {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
}

std::vector<double> taus_for(const RunConfig& cfg, Command command) {
    if (command == Command::Compute) {
        if (!cfg.tau) throw ConfigError("run.tau", 0, "compute needs a single tau (run.tau or --tau)");
        return {*cfg.tau};
    }
    return cfg.grid.values();
}

// Labels the valid rows of one (sweep, mode) cell from its own curve.
void label_regimes(std::vector<ResultRow*>& rows) {
    std::vector<double> tau, gamma;
    for (const auto* r : rows)
        if (r->error.empty()) {
            tau.push_back(r->tau);
            gamma.push_back(r->gamma);
        }
    if (tau.size() < 3) return;
    const auto report = regimes::classify(tau, gamma);
    for (auto* r : rows)
        if (r->error.empty()) r->regime = std::string(regimes::to_string(report.regime_at(r->tau)));
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (auto c : {Command::Compute, Command::Curve, Command::Sweep, Command::Compare, Command::OracleCheck})
        if (name == to_string(c)) return c;
    return std::nullopt;
}

std::string_view to_string(Command command) {
    switch (command) {
        case Command::Compute: return "compute";
        case Command::Curve: return "curve";
        case Command::Sweep: return "sweep";
        case Command::Compare: return "compare";
        case Command::OracleCheck: return "oracle-check";
    }
    return "compute";
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg, Command command) {
    std::vector<std::pair<std::string, std::string>> h;
    h.emplace_back("version", std::string(zeno::kVersion));
    h.emplace_back("command", std::string(to_string(command)));
    h.emplace_back("system.epsilon", exact(cfg.system.epsilon));
    h.emplace_back("system.delta", exact(cfg.system.delta));
    h.emplace_back("system.beta", cfg.beta ? exact(*cfg.beta) : "zero_temperature");
    if (cfg.bath_type == BathType::Continuum) {
        h.emplace_back("bath.type", "continuum");
        h.emplace_back("bath.coupling", exact(cfg.density.coupling));
        h.emplace_back("bath.ohmicity", exact(cfg.density.ohmicity));
        h.emplace_back("bath.cutoff", exact(cfg.density.cutoff));
    } else {
        h.emplace_back("bath.type", "discrete");
        std::string modes;
        for (std::size_t i = 0; i < cfg.discrete_modes.size(); ++i)
            modes += (i ? ", " : "") + exact(cfg.discrete_modes[i].omega) + ":" + exact(cfg.discrete_modes[i].g);
        h.emplace_back("bath.modes", modes);
        h.emplace_back("bath.n_max", std::to_string(cfg.n_max));
    }
    std::string modes;
    for (std::size_t i = 0; i < cfg.modes.size(); ++i)
        modes += (i ? ", " : "") + std::string(survival::to_string(cfg.modes[i]));
    h.emplace_back("run.modes", modes);
    if (command == Command::Compute) {
        h.emplace_back("run.tau", cfg.tau ? exact(*cfg.tau) : "");
    } else {
        h.emplace_back("run.tau_min", exact(cfg.grid.tau_min));
        h.emplace_back("run.tau_max", exact(cfg.grid.tau_max));
        h.emplace_back("run.tau_points", std::to_string(cfg.grid.points));
        h.emplace_back("run.spacing", std::string(regimes::to_string(cfg.grid.spacing)));
    }
    const bool swept = cfg.sweep != SweepVariable::None && command != Command::Curve;
    h.emplace_back("run.sweep", swept ? std::string(to_string(cfg.sweep)) : "none");
    if (swept) h.emplace_back("run.sweep_values", join(cfg.sweep_values));
    const auto opts = cfg.survival_options();
    h.emplace_back("run.tolerance", exact(opts.abs_tol));
    h.emplace_back("run.max_order", std::to_string(opts.max_order));
    h.emplace_back("survival.initial_order", std::to_string(opts.initial_order));
    h.emplace_back("survival.range_tolerance", exact(opts.range_tolerance));
    h.emplace_back("kernel.abs_tol", exact(bath::KernelSettings{}.abs_tol));
    h.emplace_back("regimes.slope_noise_floor", exact(regimes::kSlopeNoiseFloor));
    if (command == Command::OracleCheck) h.emplace_back("run.oracle_tolerance", exact(cfg.oracle_tolerance));
    return h;
}

RunOutcome run(const RunConfig& cfg, Command command) {
    RunOutcome out;
    out.messages = cfg.notes;
    out.table.header = config_echo(cfg, command);

    if (command == Command::Sweep && cfg.sweep == SweepVariable::None)
        throw ConfigError("run.sweep", 0, "the sweep command needs run.sweep and run.sweep_values");
    if (command == Command::Compare && cfg.modes.size() < 2)
        throw ConfigError("run.modes", 0, "the compare command needs at least two modes");
    if (command == Command::OracleCheck) {
        if (cfg.bath_type != BathType::Discrete)
            throw ConfigError("bath.type", 0, "oracle-check needs a discrete bath");
        if (cfg.beta || cfg.sweep == SweepVariable::Beta)
            throw ConfigError("system.beta", 0, "oracle-check runs at zero temperature only");
    }

    const auto taus = taus_for(cfg, command);
    auto sweep_points = cfg.sweep_points();
    if (command == Command::Curve) sweep_points = {std::nullopt};
    const auto opts = cfg.survival_options();

    std::size_t failed = 0;
    int first_exit = exit_code::kOk;
    double worst_oracle = 0.0;

    for (const auto& v : sweep_points) {
        const auto sys = cfg.system_at(v);
        std::optional<survival::SurvivalEvaluator> evaluator;
        std::optional<oracle::ExactPropagator> propagator;
        const auto setup = guarded([&] {
            evaluator.emplace(sys, cfg.kernel_at(v), taus.back(), opts);
            if (command == Command::OracleCheck) {
                oracle::TruncatedBathSpec spec{bath::DiscreteBath(cfg.discrete_modes), cfg.n_max};
                propagator.emplace(sys, spec);
            }
        });

        for (const auto mode : cfg.modes) {
            std::vector<ResultRow> rows(taus.size());
            std::vector<std::optional<Failure>> failures(taus.size());
            parallel_for(taus.size(), cfg.threads, [&](std::size_t i) {
                auto& r = rows[i];
                r.sweep = v;
                r.tau = taus[i];
                r.mode = std::string(survival::to_string(mode));
                r.gamma = kNaN;
                r.s = kNaN;
                r.validity = evaluator ? evaluator->validity() : kNaN;
                if (setup) {
                    failures[i] = setup;
                    return;
                }
                failures[i] = guarded([&] {
                    const auto res = evaluator->evaluate(mode, taus[i]);
                    r.s = res.s;
                    if (propagator) r.reference = propagator->survival(taus[i], survival::is_removed(mode));
                    r.gamma = survival::decay_rate_from(res.s, taus[i], res.validity, opts.range_tolerance);
                });
            });
            std::vector<ResultRow*> cell;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (failures[i]) {
                    rows[i].error = failures[i]->code;
                    ++failed;
                    if (first_exit == exit_code::kOk) {
                        first_exit = failures[i]->exit;
                        out.messages.push_back("error: " + failures[i]->message);
                    }
                }
                if (rows[i].reference && std::isfinite(rows[i].s))
                    worst_oracle = std::max(worst_oracle, std::abs(rows[i].s - *rows[i].reference));
                out.table.rows.push_back(std::move(rows[i]));
            }
            for (std::size_t i = out.table.rows.size() - taus.size(); i < out.table.rows.size(); ++i)
                cell.push_back(&out.table.rows[i]);
            if (command != Command::Compute) label_regimes(cell);
        }
    }

    const std::size_t total = out.table.rows.size();
    if (failed > 0)
        out.messages.push_back("note: " + std::to_string(failed) + " of " + std::to_string(total) +
                               " cells failed and are marked in the error column");
    if (failed == total) {
        out.exit_code = first_exit;
        return out;
    }

    if (command == Command::Compare) {
        for (std::size_t m = 1; m < cfg.modes.size(); ++m) {
            double worst = 0.0;
            const std::size_t nm = cfg.modes.size();
            for (std::size_t p = 0; p < sweep_points.size(); ++p)
                for (std::size_t i = 0; i < taus.size(); ++i) {
                    const auto& a = out.table.rows[(p * nm) * taus.size() + i];
                    const auto& b = out.table.rows[(p * nm + m) * taus.size() + i];
                    if (a.error.empty() && b.error.empty() && a.gamma != 0.0)
                        worst = std::max(worst, std::abs(b.gamma - a.gamma) / std::abs(a.gamma));
                }
            char buf[160];
            std::snprintf(buf, sizeof buf, "compare: max relative deviation of %s from %s = %.6g",
                          std::string(survival::to_string(cfg.modes[m])).c_str(),
                          std::string(survival::to_string(cfg.modes[0])).c_str(), worst);
            out.messages.emplace_back(buf);
        }
    }
    if (command == Command::OracleCheck) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "oracle-check: max |s - s_exact| = %.6g (bound %.6g)", worst_oracle,
                      cfg.oracle_tolerance);
        out.messages.emplace_back(buf);
        if (worst_oracle > cfg.oracle_tolerance) out.exit_code = exit_code::kOracleMismatch;
    }
    return out;
}

}  // namespace zeno::cli
