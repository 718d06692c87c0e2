// Executes a RunConfig for one of the tool's subcommands.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/cli/config.hpp"
#include "zeno/cli/table.hpp"

namespace zeno::cli {

enum class Command { Compute, Curve, Sweep, Compare, OracleCheck };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kOther = 1;
inline constexpr int kConfig = 2;
inline constexpr int kOutOfRegime = 3;
inline constexpr int kQuadrature = 4;
inline constexpr int kOracleMismatch = 5;
}  // namespace exit_code

struct RunOutcome {
    ResultTable table;
    std::vector<std::string> messages;  // notes for stderr
    int exit_code{exit_code::kOk};
};

// Header echo of every parameter that affects the numbers.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg, Command command);

// Cells are (sweep value × mode × τ), emitted sweep-major, then mode, then τ.
// Failed cells keep their row with an error code. The exit code is nonzero
// only when every cell failed (or, for oracle-check, when the agreement
// bound is violated).
RunOutcome run(const RunConfig& cfg, Command command);

}  // namespace zeno::cli
