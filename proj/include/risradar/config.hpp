#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "risradar/geometry.hpp"

namespace risradar {

// Sectioned `key = value` document. `#` starts a comment, lists are
// comma-separated, keys before the first `[section]` land in section "".
class ConfigDocument {
public:
    static ConfigDocument parse(std::string_view text);
    static ConfigDocument load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::optional<std::string> raw(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key, std::uint64_t fallback) const;
    std::vector<double> get_list(const std::string& section, const std::string& key) const;
    std::vector<double> get_list(const std::string& section, const std::string& key,
                                 const std::vector<double>& fallback) const;
    Vec3 get_vec3(const std::string& section, const std::string& key) const;
    std::optional<Vec3> get_optional_vec3(const std::string& section, const std::string& key) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

double parse_double(std::string_view text);

}  // namespace risradar
