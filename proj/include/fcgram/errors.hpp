#pragma once

#include <stdexcept>
#include <string>

namespace fcgram {

// Parameter or argument outside the documented domain of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed (singular system, zero spectrum, ...).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// The requested continuation method cannot be applied to the given input.
struct MethodError : std::runtime_error {
    explicit MethodError(const std::string& what) : std::runtime_error(what) {}
};

// Function id not present in the registry.
struct UnknownFunction : std::runtime_error {
    explicit UnknownFunction(const std::string& what) : std::runtime_error(what) {}
};

// Division by a zero denominator in an error ratio.
struct DivisionError : std::runtime_error {
    explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

// I/O failure distinguished from parameter problems for CLI exit codes.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fcgram
