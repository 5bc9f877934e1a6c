#pragma once

#include <stdexcept>
#include <string>

namespace psnet {

/// Malformed or unreadable input/output files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated preconditions, invariants, or numerical validation rules.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace psnet
