#include "sumset/errors.hpp"

namespace sumset {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::PartitionOfUnityViolated: return "PartitionOfUnityViolated";
    case ErrorKind::MeanTooSmall: return "MeanTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace sumset
