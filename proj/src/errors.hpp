#pragma once

#include <stdexcept>
#include <string>

namespace smg {

// Raised when a computation on a truncated cell graph would need vertices
// beyond the materialized window; the caller re-materializes with a larger
// window and retries.
struct UnderflowError : std::runtime_error {
    explicit UnderflowError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace smg
