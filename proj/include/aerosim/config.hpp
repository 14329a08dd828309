#ifndef AEROSIM_CONFIG_HPP
#define AEROSIM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace aerosim::config {

/// Flat key=value configuration. Dotted keys act as sections
/// (tdma.slot_duration_s=0.01). '#' comments and blank lines are ignored.
/// Every getter marks its key as consumed; reject_unknown() then fails on
/// anything the caller never asked about, so typos never pass silently.
class ConfigDocument {
public:
    ConfigDocument() = default;

    static ConfigDocument parse(const std::string& text, const std::string& source = "<config>");
    static ConfigDocument load(const std::string& path);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<int> get_int_list(const std::string& key) const;

    /// Resolves a path value relative to the config file's directory.
    std::string get_path(const std::string& key) const;

    /// Throws ConfigError naming every key that was present but never read.
    void reject_unknown() const;

    const std::string& source() const { return source_; }

private:
    struct Entry {
        std::string value;
        int line;
    };

    const Entry& require(const std::string& key) const;

    std::string source_;
    std::string base_dir_;
    std::map<std::string, Entry> entries_;
    mutable std::set<std::string> consumed_;
};

} // namespace aerosim::config

#endif
