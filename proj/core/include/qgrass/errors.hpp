#pragma once

#include <stdexcept>
#include <string>

namespace qgrass {

// Malformed or out-of-range input (bad partition shape, bad degree, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// The requested invariant is undefined because the codimension condition
// fails.  Distinct from a zero value.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computational routes disagree.  This is never swallowed.
class CrossCheckError : public std::runtime_error {
public:
    explicit CrossCheckError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qgrass
