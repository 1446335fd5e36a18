#pragma once

#include "lgkit/verify.hpp"

#include <string>
#include <vector>

namespace lgkit::cli {

/// Rectangular numeric table, the payload of every grid command.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Doubles serialized with 17 significant digits: round-trip exact and
/// byte-stable across runs.
std::string fmt17(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

std::string json_escape(const std::string& s);

/// Verification report with the fixed schema
/// {suite, checks:[{id, anchor, residual, tol, pass, ms}], pass}.
std::string report_to_json(const lgkit::verify::Report& report);

}  // namespace lgkit::cli
