#include "zeno/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace zeno::cli {

using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

bool ResultTable::has_reference() const {
    for (const auto& r : rows)
        if (r.reference) return true;
    return false;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void emit_csv(const ResultTable& table, std::ostream& out) {
    for (const auto& [k, v] : table.header) out << "# " << k << " = " << v << '\n';
    const bool ref = table.has_reference();
    out << "sweep,tau,gamma,s,validity,regime,error,mode" << (ref ? ",s_exact" : "") << '\n';
    for (const auto& r : table.rows) {
        out << (r.sweep ? format_number(*r.sweep) : "") << ',' << format_number(r.tau) << ','
            << format_number(r.gamma) << ',' << format_number(r.s) << ',' << format_number(r.validity) << ','
            << r.regime << ',' << r.error << ',' << r.mode;
        if (ref) out << ',' << (r.reference ? format_number(*r.reference) : "");
        out << '\n';
    }
}

namespace {

ordered_json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

double from_json(const ordered_json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

void emit_json(const ResultTable& table, std::ostream& out) {
    ordered_json doc;
    ordered_json config = ordered_json::object();
    for (const auto& [k, v] : table.header) config[k] = v;
    doc["config"] = config;
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
        ordered_json row;
        row["sweep"] = r.sweep ? ordered_json(*r.sweep) : ordered_json(nullptr);
        row["tau"] = r.tau;
        row["gamma"] = number_or_null(r.gamma);
        row["s"] = number_or_null(r.s);
        row["validity"] = number_or_null(r.validity);
        row["regime"] = r.regime;
        row["error"] = r.error;
        row["mode"] = r.mode;
        if (r.reference) row["s_exact"] = *r.reference;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void emit(const ResultTable& table, Format format, std::ostream& out) {
    if (format == Format::Csv)
        emit_csv(table, out);
    else
        emit_json(table, out);
}

void emit_to_file(const ResultTable& table, Format format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    emit(table, format, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

ResultTable parse_table_json(std::string_view text) {
    const auto doc = ordered_json::parse(text);
    ResultTable t;
    for (const auto& [k, v] : doc.at("config").items()) t.header.emplace_back(k, v.get<std::string>());
    for (const auto& j : doc.at("rows")) {
        ResultRow r;
        if (!j.at("sweep").is_null()) r.sweep = j.at("sweep").get<double>();
        r.tau = j.at("tau").get<double>();
        r.gamma = from_json(j.at("gamma"));
        r.s = from_json(j.at("s"));
        r.validity = from_json(j.at("validity"));
        r.regime = j.at("regime").get<std::string>();
        r.error = j.at("error").get<std::string>();
        r.mode = j.at("mode").get<std::string>();
        if (j.contains("s_exact")) r.reference = j.at("s_exact").get<double>();
        t.rows.push_back(std::move(r));
    }
    return t;
}

}  // namespace zeno::cli
