// zeno command-line tool

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zeno/cli/runner.hpp"
#include "zeno/errors.hpp"
#include "zeno/version.hpp"

namespace {

struct Flags {
    std::string config;
    std::string format{"csv"};
    std::string out;
    double tol{0.0};
    int threads{-1};
    double tau{0.0};
};

int execute(zeno::cli::Command command, const Flags& flags) {
    using namespace zeno::cli;
    RunConfig cfg = load_config(flags.config);
    if (flags.tol > 0.0) cfg.tolerance = flags.tol;
    if (flags.threads >= 0) cfg.threads = static_cast<unsigned>(flags.threads);
    if (flags.tau > 0.0) cfg.tau = flags.tau;
    const auto format = parse_format(flags.format);
    if (!format) throw ConfigError("--format", 0, "expected csv or json");

    const auto outcome = run(cfg, command);
    for (const auto& m : outcome.messages) std::cerr << m << '\n';
    if (flags.out.empty())
        emit(outcome.table, *format, std::cout);
    else
        emit_to_file(outcome.table, *format, flags.out);
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace zeno::cli;
    CLI::App app{"Survival probability and effective decay rate of a repeatedly measured spin-boson system"};
    app.set_version_flag("--version", std::string(zeno::kVersion));
    app.require_subcommand(1);

    Flags flags;
    Command chosen = Command::Compute;
    const std::pair<Command, const char*> commands[] = {
        {Command::Compute, "Evaluate s and Gamma at a single tau"},
        {Command::Curve, "Gamma(tau) over the configured grid"},
        {Command::Sweep, "Gamma(tau) for every value of the sweep variable"},
        {Command::Compare, "Several approaches side by side on the same grid"},
        {Command::OracleCheck, "Perturbative s(tau) against exact dynamics of a discrete bath"},
    };
    for (const auto& [command, help] : commands) {
        auto* sub = app.add_subcommand(std::string(to_string(command)), help);
        sub->add_option("--config", flags.config, "Configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", flags.out, "Output path (default: stdout)");
        sub->add_option("--tol", flags.tol, "Absolute tolerance on s")->check(CLI::PositiveNumber);
        sub->add_option("--threads", flags.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
        if (command == Command::Compute) sub->add_option("--tau", flags.tau, "Measurement interval")->check(CLI::PositiveNumber);
        sub->callback([&chosen, command = command] { chosen = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code::kConfig;
    }

    try {
        return execute(chosen, flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_code::kConfig;
    } catch (const zeno::OutOfRegime& e) {
        std::cerr << "out of regime: " << e.what() << '\n';
        return exit_code::kOutOfRegime;
    } catch (const zeno::QuadratureFailure& e) {
        std::cerr << "quadrature failure: " << e.what() << '\n';
        return exit_code::kQuadrature;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::kOther;
    }
}
