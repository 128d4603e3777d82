#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radarndn {

/// Raised on any malformed or invalid configuration input, with
/// file/line/field diagnostics in the message.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// One `[section]` of a config file: ordered key = value fields.
/// Sections may repeat (one [node] per node, one [link] per link).
struct ConfigSection {
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> fields;

    bool has(const std::string& key) const;
    /// Required field; throws ConfigError when missing.
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    std::uint64_t get_u64(const std::string& key) const;
    std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;
    /// Parses "[a, b, c]" (or bare "a, b, c") into doubles.
    std::vector<double> get_double_list(const std::string& key) const;

    /// Throws ConfigError if a field key outside `allowed` is present.
    void reject_unknown(const std::vector<std::string>& allowed) const;
};

struct ConfigFile {
    std::string path;
    std::vector<ConfigSection> sections;

    std::vector<const ConfigSection*> all(const std::string& name) const;
    const ConfigSection* find(const std::string& name) const;  // first or nullptr
};

/// Parses the toml-like `[section]` / `key = value` format used by topology
/// and scenario files. '#' starts a comment; values may be double-quoted.
ConfigFile parse_config_text(const std::string& text, const std::string& path_label);
ConfigFile load_config(const std::string& path);

}  // namespace radarndn
