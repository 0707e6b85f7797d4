#pragma once

#include <stdexcept>
#include <string>

namespace gbx {

// Domain violation on a documented precondition (bad argument value).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request reaches past what a loaded resource covers (sieve limit, zero table height).
struct coverage_error : std::out_of_range {
    explicit coverage_error(const std::string& msg) : std::out_of_range(msg) {}
};

// Resource construction refused (memory budget, size caps).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; message carries the offending line number where known.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user configuration (CLI layer maps this to exit code 2).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gbx
