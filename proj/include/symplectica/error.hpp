#pragma once

#include <stdexcept>
#include <string>

namespace symplectica {

/// Failure categories shared by the C++ core and the C API.
enum class ErrorCode : int {
    invalid_argument = 1,   // malformed input (shapes, ranges, non-prime p)
    domain = 2,             // arithmetic outside its domain (inverse of zero)
    validation = 3,         // object fails its invariants (singular gram, ...)
    precondition = 4,       // operation called outside its stated hypotheses
    size_bound = 5,         // instance exceeds a configured budget
    ambiguous = 6,          // stars and tops cannot be told apart (middle level)
    internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace symplectica
