#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace lgkit::cli {

std::string fmt17(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";  // fold negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += fmt17(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    std::string out = "{\"columns\":[";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += '"' + json_escape(table.columns[c]) + '"';
    }
    out += "],\"rows\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out += ',';
            out += fmt17(table.rows[r][c]);
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

std::string report_to_json(const lgkit::verify::Report& report) {
    std::string out = "{\"suite\":\"" + json_escape(report.suite) + "\",\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        if (i) out += ',';
        out += "{\"id\":\"" + json_escape(c.id) + "\",\"anchor\":\"" +
               json_escape(c.anchor) + "\",\"residual\":" + fmt17(c.residual) +
               ",\"tol\":" + fmt17(c.tol) + ",\"pass\":" + (c.pass ? "true" : "false") +
               ",\"ms\":" + fmt17(c.ms) + "}";
    }
    out += "],\"pass\":";
    out += report.pass ? "true" : "false";
    out += "}\n";
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace lgkit::cli
