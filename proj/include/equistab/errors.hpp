#pragma once

#include <stdexcept>
#include <string>

namespace equistab {

// Bad input data: malformed JSON, violated preconditions, inconsistent
// mathematical data (H not a subgroup, d^2 != 0, ...).  CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource bound was exceeded.  CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace equistab
