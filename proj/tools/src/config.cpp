#include "zeno/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno::cli {

ConfigError::ConfigError(std::string key, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ", key '" + key + "': " + message
                                  : "config key '" + key + "': " + message),
      key_(std::move(key)),
      line_(line) {}

std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::None: return "none";
        case SweepVariable::Coupling: return "coupling";
        case SweepVariable::Delta: return "delta";
        case SweepVariable::Epsilon: return "epsilon";
        case SweepVariable::Ohmicity: return "ohmicity";
        case SweepVariable::Cutoff: return "cutoff";
        case SweepVariable::Beta: return "beta";
    }
    return "none";
}

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"system", {"epsilon", "delta", "beta"}},
        {"bath", {"type", "coupling", "ohmicity", "cutoff", "modes", "n_max"}},
        {"run",
         {"modes", "tau_min", "tau_max", "tau_points", "spacing", "tau", "sweep", "sweep_values", "tolerance",
          "max_order", "threads", "strict_validity", "oracle_tolerance"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

struct Entry {
    std::string value;
    int line;
};

class Document {
public:
    explicit Document(std::string_view text) {
        std::string section;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            auto line = std::string(raw);
            const auto hash = line.find_first_of("#;");
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') throw ConfigError(line, line_no, "malformed section header");
                section = lower(trim(line.substr(1, line.size() - 2)));
                if (!known_keys().count(section)) throw ConfigError(section, line_no, "unknown section");
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ConfigError(line, line_no, "expected 'key = value'");
            const auto key = lower(trim(line.substr(0, eq)));
            const auto value = trim(line.substr(eq + 1));
            if (section.empty()) throw ConfigError(key, line_no, "key outside of a section");
            const auto full = section + "." + key;
            if (!known_keys().at(section).count(key)) throw ConfigError(full, line_no, "unknown key");
            if (entries_.count(full)) throw ConfigError(full, line_no, "duplicate key");
            if (value.empty()) throw ConfigError(full, line_no, "empty value");
            entries_[full] = {value, line_no};
        }
    }

    bool has(const std::string& key) const { return entries_.count(key) > 0; }
    int line(const std::string& key) const { return has(key) ? entries_.at(key).line : 0; }

    const Entry& require(const std::string& key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) throw ConfigError(key, 0, "missing required key");
        return it->second;
    }

    double number(const std::string& key) const { return parse_number(key, require(key)); }
    double number_or(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

    long integer_or(const std::string& key, long fallback) const {
        if (!has(key)) return fallback;
        const auto& e = require(key);
        long v = 0;
        const auto* end = e.value.data() + e.value.size();
        const auto [p, ec] = std::from_chars(e.value.data(), end, v);
        if (ec != std::errc() || p != end) throw ConfigError(key, e.line, "expected an integer, got '" + e.value + "'");
        return v;
    }

    std::string text_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? lower(require(key).value) : fallback;
    }

    static double parse_number(const std::string& key, const Entry& e) { return parse_number(key, e.value, e.line); }

    static double parse_number(const std::string& key, const std::string& s, int line) {
        double v = 0.0;
        const auto* end = s.data() + s.size();
        const auto [p, ec] = std::from_chars(s.data(), end, v);
        if (ec != std::errc() || p != end || !std::isfinite(v))
            throw ConfigError(key, line, "expected a finite number, got '" + s + "'");
        return v;
    }

private:
    std::map<std::string, Entry> entries_;
};

template <class F>
void check(const Document& doc, const std::string& key, F&& fn) {
    try {
        fn();
    } catch (const zeno::Error& e) {
        throw ConfigError(key, doc.line(key), e.what());
    }
}

}  // namespace

polaron::SystemParams RunConfig::system_at(std::optional<double> v) const {
    auto s = system;
    if (v && sweep == SweepVariable::Delta) s.delta = *v;
    if (v && sweep == SweepVariable::Epsilon) s.epsilon = *v;
    return s;
}

bath::BathKernel RunConfig::kernel_at(std::optional<double> v) const {
    auto beta_value = beta;
    if (v && sweep == SweepVariable::Beta) beta_value = *v;
    const auto temperature =
        beta_value ? bath::InverseTemperature::finite(*beta_value) : bath::InverseTemperature::zero_temperature();
    if (bath_type == BathType::Discrete) return bath::BathKernel(bath::DiscreteBath(discrete_modes), temperature);
    auto d = density;
    if (v && sweep == SweepVariable::Coupling) d.coupling = *v;
    if (v && sweep == SweepVariable::Ohmicity) d.ohmicity = *v;
    if (v && sweep == SweepVariable::Cutoff) d.cutoff = *v;
    return bath::BathKernel(d, temperature);
}

survival::SurvivalOptions RunConfig::survival_options() const {
    survival::SurvivalOptions o;
    o.abs_tol = tolerance;
    o.max_order = max_order;
    return o;
}

std::vector<std::optional<double>> RunConfig::sweep_points() const {
    if (sweep == SweepVariable::None) return {std::nullopt};
    return {sweep_values.begin(), sweep_values.end()};
}

RunConfig parse_config(std::string_view text) {
    const Document doc(text);
    RunConfig cfg;

    cfg.system.epsilon = doc.number("system.epsilon");
    cfg.system.delta = doc.number("system.delta");
    if (doc.has("system.beta")) cfg.beta = doc.number("system.beta");
    check(doc, "system.delta", [&] { cfg.system.validate(); });
    if (cfg.beta) check(doc, "system.beta", [&] { (void)bath::InverseTemperature::finite(*cfg.beta); });

    const auto type = doc.text_or("bath.type", "continuum");
    if (type == "continuum") {
        cfg.bath_type = BathType::Continuum;
        cfg.density.coupling = doc.number("bath.coupling");
        cfg.density.ohmicity = doc.number_or("bath.ohmicity", 3.0);
        cfg.density.cutoff = doc.number("bath.cutoff");
        for (const char* k : {"bath.modes", "bath.n_max"})
            if (doc.has(k)) throw ConfigError(k, doc.line(k), "only valid for a discrete bath");
        check(doc, "bath.coupling", [&] { cfg.density.validate(); });
    } else if (type == "discrete") {
        cfg.bath_type = BathType::Discrete;
        for (const char* k : {"bath.coupling", "bath.ohmicity", "bath.cutoff"})
            if (doc.has(k)) throw ConfigError(k, doc.line(k), "only valid for a continuum bath");
        const auto& e = doc.require("bath.modes");
        for (const auto& item : split_list(e.value)) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw ConfigError("bath.modes", e.line, "expected 'omega:g' pairs");
            cfg.discrete_modes.push_back({Document::parse_number("bath.modes", trim(item.substr(0, colon)), e.line),
                                          Document::parse_number("bath.modes", trim(item.substr(colon + 1)), e.line)});
        }
        check(doc, "bath.modes", [&] { (void)bath::DiscreteBath(cfg.discrete_modes); });
        const long n = doc.integer_or("bath.n_max", 6);
        if (n < 3) throw ConfigError("bath.n_max", doc.line("bath.n_max"), "must be >= 3");
        cfg.n_max = static_cast<std::size_t>(n);
    } else {
        throw ConfigError("bath.type", doc.line("bath.type"), "expected 'continuum' or 'discrete'");
    }

    if (doc.has("run.modes")) {
        cfg.modes.clear();
        const auto& e = doc.require("run.modes");
        for (const auto& name : split_list(e.value)) {
            const auto m = survival::parse_mode(name);
            if (!m) throw ConfigError("run.modes", e.line, "unknown survival mode '" + name + "'");
            if (std::find(cfg.modes.begin(), cfg.modes.end(), *m) == cfg.modes.end()) cfg.modes.push_back(*m);
        }
        if (cfg.modes.empty()) throw ConfigError("run.modes", e.line, "no modes given");
    }

    if (doc.has("run.tau")) {
        cfg.tau = doc.number("run.tau");
        if (!(*cfg.tau > 0.0)) throw ConfigError("run.tau", doc.line("run.tau"), "must be > 0");
    }
    if (doc.has("run.tau_min") || doc.has("run.tau_max") || !cfg.tau) {
        cfg.grid.tau_min = doc.number("run.tau_min");
        cfg.grid.tau_max = doc.number("run.tau_max");
        const long points = doc.integer_or("run.tau_points", 50);
        if (points < 2) throw ConfigError("run.tau_points", doc.line("run.tau_points"), "must be >= 2");
        cfg.grid.points = static_cast<std::size_t>(points);
        const auto spacing = regimes::parse_spacing(doc.text_or("run.spacing", "geometric"));
        if (!spacing) throw ConfigError("run.spacing", doc.line("run.spacing"), "expected 'linear' or 'geometric'");
        cfg.grid.spacing = *spacing;
        check(doc, "run.tau_max", [&] { cfg.grid.validate(); });
    } else {
        cfg.grid = {*cfg.tau, *cfg.tau * 2.0, 2, regimes::GridSpacing::Linear};
    }

    if (doc.has("run.sweep")) {
        const auto name = doc.text_or("run.sweep", "none");
        const std::pair<const char*, SweepVariable> table[] = {
            {"none", SweepVariable::None},         {"coupling", SweepVariable::Coupling},
            {"delta", SweepVariable::Delta},       {"epsilon", SweepVariable::Epsilon},
            {"ohmicity", SweepVariable::Ohmicity}, {"cutoff", SweepVariable::Cutoff},
            {"beta", SweepVariable::Beta}};
        bool found = false;
        for (const auto& [n, v] : table)
            if (name == n) {
                cfg.sweep = v;
                found = true;
            }
        if (!found) throw ConfigError("run.sweep", doc.line("run.sweep"), "unknown sweep variable '" + name + "'");
    }
    if (cfg.sweep != SweepVariable::None) {
        const auto& e = doc.require("run.sweep_values");
        for (const auto& item : split_list(e.value))
            cfg.sweep_values.push_back(Document::parse_number("run.sweep_values", item, e.line));
        if (cfg.sweep_values.empty()) throw ConfigError("run.sweep_values", e.line, "no values given");
        if (cfg.bath_type == BathType::Discrete &&
            (cfg.sweep == SweepVariable::Coupling || cfg.sweep == SweepVariable::Ohmicity ||
             cfg.sweep == SweepVariable::Cutoff))
            throw ConfigError("run.sweep", doc.line("run.sweep"), "cannot sweep a spectral parameter of a discrete bath");
    } else if (doc.has("run.sweep_values")) {
        throw ConfigError("run.sweep_values", doc.line("run.sweep_values"), "given without run.sweep");
    }

    cfg.tolerance = doc.number_or("run.tolerance", 1e-8);
    if (!(cfg.tolerance > 0.0)) throw ConfigError("run.tolerance", doc.line("run.tolerance"), "must be > 0");
    const long order = doc.integer_or("run.max_order", 1024);
    if (order < 128) throw ConfigError("run.max_order", doc.line("run.max_order"), "must be >= 128");
    cfg.max_order = static_cast<int>(order);
    const long threads = doc.integer_or("run.threads", 1);
    if (threads < 0) throw ConfigError("run.threads", doc.line("run.threads"), "must be >= 0");
    cfg.threads = static_cast<unsigned>(threads);
    const auto strict = doc.text_or("run.strict_validity", "false");
    if (strict != "true" && strict != "false")
        throw ConfigError("run.strict_validity", doc.line("run.strict_validity"), "expected true or false");
    cfg.strict_validity = strict == "true";
    cfg.oracle_tolerance = doc.number_or("run.oracle_tolerance", 1e-5);

    // Per-cell checks: parameter domains, B = 0 note, validity warning.
    const bool has_full = std::find(cfg.modes.begin(), cfg.modes.end(), survival::SurvivalMode::Full) != cfg.modes.end();
    bool noted_b0 = false;
    for (const auto& v : cfg.sweep_points()) {
        const std::string where = v ? " (" + std::string(to_string(cfg.sweep)) + " = " + std::to_string(*v) + ")" : "";
        const std::string key = v ? "run.sweep_values" : "bath.coupling";
        check(doc, key, [&] {
            const auto sys = cfg.system_at(v);
            sys.validate();
            const auto kernel = cfg.kernel_at(v);
            if (kernel.divergent() && has_full && !noted_b0) {
                cfg.notes.push_back(
                    "note: B = 0 for this bath, so the FULL approach coincides with SMALL_DELTA" + where);
                noted_b0 = true;
            }
            const double metric = regimes::validity_metric(sys, kernel);
            if (metric >= regimes::kValidityWarningThreshold) {
                if (cfg.strict_validity)
                    throw ConfigError("run.strict_validity", doc.line("run.strict_validity"),
                                      "validity metric " + std::to_string(metric) + " >= 0.1" + where);
                cfg.notes.push_back("warning: validity metric (delta/omega_c)^2 (1 - B^4) = " + std::to_string(metric) +
                                    " >= 0.1" + where);
            }
        });
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", 0, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace zeno::cli
