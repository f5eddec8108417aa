#include "risradar/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "risradar/error.hpp"

namespace risradar {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string where(const std::string& section, const std::string& key) {
    return "[" + section + "] " + key;
}

}  // namespace

double parse_double(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

ConfigDocument ConfigDocument::parse(std::string_view text) {
    ConfigDocument doc;
    std::string section;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        doc.sections_[section][key] = std::string(trim(line.substr(eq + 1)));
    }
    return doc;
}

ConfigDocument ConfigDocument::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

bool ConfigDocument::has(const std::string& section, const std::string& key) const {
    return raw(section, key).has_value();
}

std::optional<std::string> ConfigDocument::raw(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) {
        return std::nullopt;
    }
    const auto k = s->second.find(key);
    if (k == s->second.end()) {
        return std::nullopt;
    }
    return k->second;
}

std::string ConfigDocument::get_string(const std::string& section, const std::string& key) const {
    auto v = raw(section, key);
    if (!v) {
        throw ConfigError("missing " + where(section, key));
    }
    return *v;
}

std::string ConfigDocument::get_string(const std::string& section, const std::string& key,
                                       const std::string& fallback) const {
    return raw(section, key).value_or(fallback);
}

double ConfigDocument::get_double(const std::string& section, const std::string& key) const {
    try {
        return parse_double(get_string(section, key));
    } catch (const ConfigError& e) {
        throw ConfigError(where(section, key) + ": " + e.what());
    }
}

double ConfigDocument::get_double(const std::string& section, const std::string& key, double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

std::uint64_t ConfigDocument::get_u64(const std::string& section, const std::string& key,
                                      std::uint64_t fallback) const {
    const auto v = raw(section, key);
    if (!v) {
        return fallback;
    }
    const std::string_view text = trim(*v);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError(where(section, key) + ": not an unsigned integer");
    }
    return value;
}

std::vector<double> ConfigDocument::get_list(const std::string& section, const std::string& key) const {
    const std::string text = get_string(section, key);
    std::vector<double> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        try {
            out.push_back(parse_double(rest.substr(0, comma)));
        } catch (const ConfigError& e) {
            throw ConfigError(where(section, key) + ": " + e.what());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return out;
}

std::vector<double> ConfigDocument::get_list(const std::string& section, const std::string& key,
                                             const std::vector<double>& fallback) const {
    return has(section, key) ? get_list(section, key) : fallback;
}

Vec3 ConfigDocument::get_vec3(const std::string& section, const std::string& key) const {
    const std::vector<double> v = get_list(section, key);
    if (v.size() != 3) {
        throw ConfigError(where(section, key) + ": expected three components");
    }
    return {v[0], v[1], v[2]};
}

std::optional<Vec3> ConfigDocument::get_optional_vec3(const std::string& section, const std::string& key) const {
    if (!has(section, key)) {
        return std::nullopt;
    }
    return get_vec3(section, key);
}

}  // namespace risradar
