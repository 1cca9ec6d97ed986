#pragma once

#include <stdexcept>
#include <string>

namespace galois {

// Error taxonomy shared by the whole library. The C layer maps these to codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Malformed wire input (JSON shape, number syntax, unknown kind tags).
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};

// Structurally valid input outside an operation's domain.
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(m) {}
};

// Enumeration or search exceeded the configured cap.
struct CapError : Error {
    explicit CapError(const std::string& m) : Error(m) {}
};

}  // namespace galois
