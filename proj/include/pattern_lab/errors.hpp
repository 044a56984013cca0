#pragma once

#include <stdexcept>
#include <string>

namespace pattern_lab {

// Invalid argument for a mathematical operation (size mismatch, undefined padding, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Work refused because it exceeds a configured resource cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pattern_lab
