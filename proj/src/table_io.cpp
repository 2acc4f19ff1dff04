#include "lgf/table_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace lgf {

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error("table file: bad numeric field '" + s + "'");
    return v;
}

}  // namespace

void write_table_csv(std::ostream& os, const TableFile& t) {
    for (const auto& [k, v] : t.metadata) os << "# " << k << "=" << v << "\n";
    os << "n,m,value\n";
    for (const auto& [n, m, value] : t.entries)
        os << n << "," << m << "," << format_double(value) << "\n";
}

TableFile read_table_csv(std::istream& is) {
    TableFile t;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            const auto eq = body.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("table file: malformed metadata line");
            t.metadata[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        if (!header_seen) {
            if (line != "n,m,value") throw std::runtime_error("table file: missing header");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string fn, fm, fv;
        if (!std::getline(ls, fn, ',') || !std::getline(ls, fm, ',') || !std::getline(ls, fv))
            throw std::runtime_error("table file: malformed row");
        t.entries.emplace_back(std::stoi(fn), std::stoi(fm), parse_double(fv));
    }
    if (!header_seen) throw std::runtime_error("table file: empty input");
    return t;
}

void write_table_json(std::ostream& os, const TableFile& t) {
    nlohmann::json j;
    j["metadata"] = t.metadata;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& [n, m, value] : t.entries)
        rows.push_back({{"n", n}, {"m", m}, {"value", value}});
    os << j.dump(2) << "\n";
}

TableFile read_table_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    TableFile t;
    for (const auto& [k, v] : j.at("metadata").items()) t.metadata[k] = v.get<std::string>();
    for (const auto& row : j.at("rows"))
        t.entries.emplace_back(row.at("n").get<int>(), row.at("m").get<int>(),
                               row.at("value").get<double>());
    return t;
}

TableFile to_table_file(const LgfTable& table, const std::string& tool_version) {
    TableFile t;
    if (table.rows.empty()) return t;
    const LgfRow& first = table.rows.front();
    t.metadata["alpha1"] = format_double(first.alpha1);
    t.metadata["c2"] = format_double(first.c2);
    t.metadata["eps"] = format_double(first.eps);
    t.metadata["method"] = method_name(first.method.tag);
    t.metadata["n_pts_used"] = std::to_string(first.n_pts_used);
    t.metadata["tool_version"] = tool_version;
    for (const LgfRow& row : table.rows)
        for (int n = 0; n < static_cast<int>(row.values.size()); ++n)
            t.entries.emplace_back(n, row.m, row.values[n]);
    return t;
}

}  // namespace lgf
