#pragma once

#include <stdexcept>
#include <string>

namespace coeffpat {

/// Malformed user input (polynomial text, flags). CLI maps it to exit code 2.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation could not produce a certified result (non-stabilization,
/// inconsistent inference, spectral cross-check failure). CLI exit code 3.
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coeffpat
