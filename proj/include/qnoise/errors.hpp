// errors.hpp
// Exception types shared across the qnoise library

#pragma once

#include <stdexcept>
#include <string>

namespace qnoise {

// Invalid parameters, malformed configs, dimension mismatches.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical diagnostics: norm drift, failed projections, uncorrectable residue.
class diagnostic_error : public std::runtime_error {
public:
    explicit diagnostic_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qnoise
