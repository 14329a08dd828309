#include "aerosim/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aerosim/errors.hpp"

namespace aerosim::config {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: '" + value + "'");
    }
    if (used != value.size() || !std::isfinite(v))
        throw ConfigError("key '" + key + "': not a number: '" + value + "'");
    return v;
}

} // namespace

ConfigDocument ConfigDocument::parse(const std::string& text, const std::string& source) {
    ConfigDocument doc;
    doc.source_ = source;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw FormatError(source, lineno, "expected key=value, got '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw FormatError(source, lineno, "empty key");
        if (doc.entries_.contains(key))
            throw FormatError(source, lineno, "duplicate key '" + key + "'");
        doc.entries_[key] = Entry{value, lineno};
    }
    return doc;
}

ConfigDocument ConfigDocument::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    ConfigDocument doc = parse(ss.str(), path);
    doc.base_dir_ = std::filesystem::path(path).parent_path().string();
    return doc;
}

bool ConfigDocument::has(const std::string& key) const {
    consumed_.insert(key);
    return entries_.contains(key);
}

const ConfigDocument::Entry& ConfigDocument::require(const std::string& key) const {
    consumed_.insert(key);
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw ConfigError(source_ + ": missing required key '" + key + "'");
    return it->second;
}

std::string ConfigDocument::get_string(const std::string& key) const { return require(key).value; }

std::string ConfigDocument::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? entries_.at(key).value : fallback;
}

double ConfigDocument::get_double(const std::string& key) const {
    return parse_double(require(key).value, key);
}

double ConfigDocument::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

std::int64_t ConfigDocument::get_int(const std::string& key) const {
    const std::string& v = require(key).value;
    try {
        std::size_t used = 0;
        const std::int64_t n = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not an integer: '" + v + "'");
    }
}

std::int64_t ConfigDocument::get_int(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t ConfigDocument::get_u64(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const std::string& v = entries_.at(key).value;
    try {
        std::size_t used = 0;
        const std::uint64_t n = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not an unsigned integer: '" + v + "'");
    }
}

std::vector<double> ConfigDocument::get_double_list(const std::string& key) const {
    const std::string& v = require(key).value;
    std::vector<double> out;
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (t.empty())
            throw ConfigError("key '" + key + "': empty list element");
        out.push_back(parse_double(t, key));
    }
    if (out.empty())
        throw ConfigError("key '" + key + "': empty list");
    return out;
}

std::vector<int> ConfigDocument::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (double v : get_double_list(key)) {
        const int n = static_cast<int>(v);
        if (static_cast<double>(n) != v)
            throw ConfigError("key '" + key + "': expected integers");
        out.push_back(n);
    }
    return out;
}

std::string ConfigDocument::get_path(const std::string& key) const {
    const std::string v = get_string(key);
    std::filesystem::path p(v);
    if (p.is_absolute() || base_dir_.empty())
        return v;
    return (std::filesystem::path(base_dir_) / p).string();
}

void ConfigDocument::reject_unknown() const {
    std::string unknown;
    for (const auto& [key, entry] : entries_) {
        if (!consumed_.contains(key)) {
            if (!unknown.empty()) unknown += ", ";
            unknown += "'" + key + "' (line " + std::to_string(entry.line) + ")";
        }
    }
    if (!unknown.empty())
        throw ConfigError(source_ + ": unknown key(s): " + unknown);
}

} // namespace aerosim::config
