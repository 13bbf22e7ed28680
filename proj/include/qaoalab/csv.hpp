#pragma once

#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaoalab {

// 17 significant digits round-trip a double exactly, which keeps CSV output
// byte-stable across reruns and recomputable by readers.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

inline double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("parse_double: trailing characters in '" + s + "'");
    return v;
}

// Angle lists inside a single CSV cell are joined with ';' so the cell
// stays one comma-separated field.
inline std::string join_doubles(std::span<const double> xs, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += sep;
        out += format_double(xs[i]);
    }
    return out;
}

inline std::vector<double> split_doubles(const std::string& s, char sep = ';') {
    std::vector<double> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, sep)) out.push_back(parse_double(cell));
    return out;
}

// Fields are written verbatim: no field we emit contains a comma, a quote,
// or a newline, so no quoting layer is needed.
inline std::string join_csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) fields.push_back(cell);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split_csv_row(line));
    }
    return rows;
}

} // namespace qaoalab
