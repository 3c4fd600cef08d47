#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace fht {

inline constexpr const char* library_version = "0.1.0";

// fixed 12-significant-digit formatting; deterministic across runs
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

using Cell = std::variant<std::string, double, long>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> r) {
        if (r.size() != columns.size())
            throw std::invalid_argument("Table: row width mismatch");
        rows.push_back(std::move(r));
    }
};

inline std::string cell_str(const Cell& c) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
    return fmt12(std::get<double>(c));
}

inline void write_csv(const Table& t, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_csv: cannot open " + path);
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        f << (i ? "," : "") << t.columns[i];
    f << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << cell_str(row[i]);
        f << "\n";
    }
}

inline void write_json_table(const Table& t, const std::string& path) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<std::string>(c))
                obj[t.columns[i]] = std::get<std::string>(c);
            else if (std::holds_alternative<long>(c))
                obj[t.columns[i]] = std::get<long>(c);
            else
                obj[t.columns[i]] = std::get<double>(c);
        }
        rows.push_back(obj);
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_json_table: cannot open " + path);
    f << rows.dump(2) << "\n";
}

// every CSV/JSON data file gets a sidecar recording the full run configuration
inline void write_sidecar(const nlohmann::json& config, const std::string& data_path) {
    nlohmann::json meta;
    meta["config"] = config;
    meta["version"] = library_version;
    std::ofstream f(data_path + ".meta.json");
    if (!f) throw std::runtime_error("write_sidecar: cannot open " + data_path + ".meta.json");
    f << meta.dump(2) << "\n";
}

// exact rational input: "1/3", "-1/2", or a plain decimal
inline double parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        }
        std::size_t u1 = 0, u2 = 0;
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        double n = static_cast<double>(std::stoll(num, &u1));
        double d = static_cast<double>(std::stoll(den, &u2));
        if (u1 != num.size() || u2 != den.size() || d == 0.0)
            throw std::invalid_argument(s);
        return n / d;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    }
}

}  // namespace fht
