#pragma once

#include <stdexcept>
#include <string>

namespace boolw {

// Malformed input: bad file, out-of-range vertex, invalid parameters.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Size guard or cap hit: the request is well-formed but too big to honor.
struct RefusalError : std::runtime_error {
    explicit RefusalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace boolw
