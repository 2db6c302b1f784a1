#pragma once

#include <stdexcept>
#include <string>

namespace atoric {

// Base of everything the library throws on bad input or unmet preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input. `code` is a short machine-readable tag.
class ValidationError : public Error {
public:
    ValidationError(std::string code, const std::string& message)
        : Error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Input is well formed but the requested operation does not apply to it.
class PreconditionError : public Error {
public:
    PreconditionError(std::string code, const std::string& message)
        : Error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A cross-check between two independent computations disagreed.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace atoric
