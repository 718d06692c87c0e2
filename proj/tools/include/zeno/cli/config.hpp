// Run configuration for the zeno tool.
//
// Grammar: one `key = value` per line inside [system], [bath] or [run]
// sections; `#` or `;` start a comment; lists are comma separated.
//
//   [system]  epsilon, delta, beta (omit for zero temperature)
//   [bath]    type = continuum | discrete
//             coupling, ohmicity (3), cutoff              continuum
//             modes = w1:g1, w2:g2, ...   n_max (6)        discrete
//   [run]     modes (full), tau_min, tau_max, tau_points (50),
//             spacing (geometric), tau (single point),
//             sweep (coupling|delta|epsilon|ohmicity|cutoff|beta),
//             sweep_values, tolerance (1e-8), max_order (1024),
//             threads (1), strict_validity (false), oracle_tolerance (1e-5)

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/bath.hpp"
#include "zeno/polaron.hpp"
#include "zeno/regimes.hpp"
#include "zeno/survival.hpp"

namespace zeno::cli {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, int line, const std::string& message);

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }  // 0 when not tied to a line

private:
    std::string key_;
    int line_;
};

enum class BathType { Continuum, Discrete };

enum class SweepVariable { None, Coupling, Delta, Epsilon, Ohmicity, Cutoff, Beta };

std::string_view to_string(SweepVariable v);

struct RunConfig {
    polaron::SystemParams system{};
    std::optional<double> beta{};  // empty → zero temperature

    BathType bath_type{BathType::Continuum};
    bath::SpectralDensity density{};
    std::vector<bath::BathMode> discrete_modes{};
    std::size_t n_max{6};

    std::vector<survival::SurvivalMode> modes{survival::SurvivalMode::Full};
    regimes::TauGrid grid{};
    std::optional<double> tau{};

    SweepVariable sweep{SweepVariable::None};
    std::vector<double> sweep_values{};

    double tolerance{1e-8};
    int max_order{1024};
    unsigned threads{1};
    bool strict_validity{false};
    double oracle_tolerance{1e-5};

    std::vector<std::string> notes{};  // informational messages gathered while parsing

    // Parameters actually used for one sweep cell.
    polaron::SystemParams system_at(std::optional<double> sweep_value) const;
    bath::BathKernel kernel_at(std::optional<double> sweep_value) const;
    survival::SurvivalOptions survival_options() const;
    std::vector<std::optional<double>> sweep_points() const;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

}  // namespace zeno::cli
