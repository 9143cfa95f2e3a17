#pragma once

#include <stdexcept>
#include <string>

namespace hamres {

// Bad user-supplied parameters (CLI flags, config files, malformed inputs).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation would exceed its configured budget (vertex limit,
// subset-enumeration budget, oracle-call budget). Never downgraded to an
// approximate answer.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hamres
