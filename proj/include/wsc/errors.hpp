#pragma once

#include <stdexcept>
#include <string>

namespace wsc {

// Structured error codes surfaced through the CLI exit-code contract:
// every code except ResourceLimit maps to exit 2, ResourceLimit to exit 3.
enum class ErrorCode {
    InvalidVertex,
    VoidComplex,
    NotAVertex,
    InvalidDimension,
    ArityMismatch,
    NotSquarefree,
    DegenerateIdeal,
    InvalidExponent,
    InvalidWeight,
    InvalidEdge,
    InvalidCharacteristic,
    ResourceLimit,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace wsc
