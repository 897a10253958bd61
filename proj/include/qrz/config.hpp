#pragma once

// Sweep configuration: a flat `key = value` text file, `#` comments, arrays
// written as [a, b, c].
//
//   p_list = [7, 17, 23]
//   m_list = [4, 5]
//   budget = 1048576
//   format = json            # json | csv
//   output = -               # path, or - for stdout
//   errata_expectation = desk.errata
//   require_exhaustive = false

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qrz/lincode.hpp"
#include "qrz/modring.hpp"

namespace qrz {

struct SweepConfig {
    std::vector<u64> p_list;
    std::vector<unsigned> m_list;
    u64 budget = default_weight_budget;
    std::string output = "-";
    std::string format = "json";
    /// Resolved against the config file's directory; empty = no comparison.
    std::string errata_expectation;
    bool require_exhaustive = false;
};

namespace detail {

inline std::string trim_ws(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::string unquote(std::string s) {
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
        return s.substr(1, s.size() - 2);
    return s;
}

[[noreturn]] inline void config_fail(int line, const std::string& field, const std::string& msg) {
    throw error(errc::parse_error, "line " + std::to_string(line) + ", field '" + field + "': " + msg);
}

inline u64 parse_u64(const std::string& tok, int line, const std::string& field) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        config_fail(line, field, "expected a non-negative integer, got '" + tok + "'");
    return v;
}

inline std::vector<u64> parse_array(const std::string& value, int line, const std::string& field) {
    if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        config_fail(line, field, "expected an array like [7, 17]");
    std::vector<u64> out;
    std::stringstream ss(value.substr(1, value.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim_ws(tok);
        if (tok.empty()) continue;
        out.push_back(parse_u64(tok, line, field));
    }
    return out;
}

}  // namespace detail

inline SweepConfig parse_sweep_config(std::istream& in, const std::filesystem::path& base_dir = {}) {
    SweepConfig cfg;
    std::string raw;
    int line = 0;
    int p_line = 0, m_line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        raw = detail::trim_ws(raw);
        if (raw.empty()) continue;
        const auto eq = raw.find('=');
        if (eq == std::string::npos) detail::config_fail(line, raw, "expected key = value");
        const std::string key = detail::trim_ws(raw.substr(0, eq));
        const std::string value = detail::trim_ws(raw.substr(eq + 1));
        if (key == "p_list") {
            cfg.p_list = detail::parse_array(value, line, key);
            p_line = line;
        } else if (key == "m_list") {
            cfg.m_list.clear();
            for (u64 m : detail::parse_array(value, line, key)) cfg.m_list.push_back(static_cast<unsigned>(m));
            m_line = line;
        } else if (key == "budget") {
            cfg.budget = detail::parse_u64(value, line, key);
        } else if (key == "output") {
            cfg.output = detail::unquote(value);
        } else if (key == "format") {
            cfg.format = detail::unquote(value);
            if (cfg.format != "json" && cfg.format != "csv") detail::config_fail(line, key, "must be json or csv");
        } else if (key == "errata_expectation") {
            const std::filesystem::path p = detail::unquote(value);
            cfg.errata_expectation = (p.is_absolute() || base_dir.empty() ? p : base_dir / p).string();
        } else if (key == "require_exhaustive") {
            if (value != "true" && value != "false") detail::config_fail(line, key, "must be true or false");
            cfg.require_exhaustive = value == "true";
        } else {
            detail::config_fail(line, key, "unknown key");
        }
    }
    if (cfg.p_list.empty()) detail::config_fail(p_line, "p_list", "must be a nonempty array");
    for (u64 p : cfg.p_list)
        if (!is_prime(p) || (p % 8 != 1 && p % 8 != 7))
            detail::config_fail(p_line, "p_list", std::to_string(p) + " is not a prime = +-1 mod 8");
    if (cfg.m_list.empty()) detail::config_fail(m_line, "m_list", "must be a nonempty array");
    for (unsigned m : cfg.m_list)
        if (m < 4 || m > 8) detail::config_fail(m_line, "m_list", std::to_string(m) + " outside [4, 8]");
    return cfg;
}

inline SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open config " + path.string());
    return parse_sweep_config(in, path.parent_path());
}

}  // namespace qrz
