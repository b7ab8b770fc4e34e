#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumset {

/// Error categories surfaced by the library; the CLI renders them as
/// {"error": {"kind": ..., "message": ...}}.
enum class ErrorKind {
    InsufficientPrecision,
    ConstantPolynomial,
    ZeroDegree,
    SizeCap,
    PreconditionFailed,
    PartitionOfUnityViolated,
    MeanTooSmall,
    BudgetExceeded,
    ConfigInvalid,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace sumset
