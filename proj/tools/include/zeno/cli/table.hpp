// Result tables and their CSV / JSON serialization.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zeno::cli {

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view name);

struct ResultRow {
    std::optional<double> sweep;
    double tau{0.0};
    double gamma{0.0};  // NaN for failed cells
    double s{0.0};      // NaN when not computed
    double validity{0.0};
    std::string regime;  // ZENO, ANTI_ZENO, or empty for failed cells
    std::string error;   // empty, out_of_regime, quadrature_failure, ...
    std::string mode;
    std::optional<double> reference;  // exact survival (oracle-check only)

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ResultTable {
    // Ordered key/value echo of everything that affects the numbers.
    std::vector<std::pair<std::string, std::string>> header;
    std::vector<ResultRow> rows;

    bool has_reference() const;
};

// Column order: sweep, tau, gamma, s, validity, regime, error, mode[, s_exact].
void emit_csv(const ResultTable& table, std::ostream& out);
void emit_json(const ResultTable& table, std::ostream& out);
void emit(const ResultTable& table, Format format, std::ostream& out);
void emit_to_file(const ResultTable& table, Format format, const std::string& path);

ResultTable parse_table_json(std::string_view text);

// %.12g; nan / inf spelled out.
std::string format_number(double v);

}  // namespace zeno::cli
