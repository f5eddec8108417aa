#pragma once

#include <stdexcept>
#include <string>

namespace risradar {

// Invalid or inconsistent scenario/configuration input.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematical domain violation (zero distance, zero reference amplitude, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A regime or model combination the analysis does not cover.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace risradar
