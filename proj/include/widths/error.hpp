#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace widths {

enum class ErrorKind {
    NotConvex,
    DegenerateInput,
    NotClosedCycle,
    BadParameter,
    ZeroVector,
    NotSymmetric,
    BadLength,
    TooLarge,
    NotInP,
    NoValidRotation,
    CutTooLarge,
    RetryExhausted,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module; `kind()` identifies the failed contract.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotClosedCycle: return "NotClosedCycle";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotInP: return "NotInP";
    case ErrorKind::NoValidRotation: return "NoValidRotation";
    case ErrorKind::CutTooLarge: return "CutTooLarge";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace widths
