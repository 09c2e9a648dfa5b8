#include "csa/error.hpp"

namespace csa {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::NonInvertibleImage: return "NonInvertibleImage";
        case ErrorCode::ParityMismatch: return "ParityMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::FrozenVertex: return "FrozenVertex";
        case ErrorCode::MultiplicityOutOfRange: return "MultiplicityOutOfRange";
        case ErrorCode::ConditionCViolated: return "ConditionCViolated";
        case ErrorCode::MutationForbidden: return "MutationForbidden";
        case ErrorCode::NonLaurent: return "NonLaurent";
        case ErrorCode::ZeroBodyDenominator: return "ZeroBodyDenominator";
        case ErrorCode::NonInvertible: return "NonInvertible";
        case ErrorCode::NonInvertibleWest: return "NonInvertibleWest";
        case ErrorCode::FriezeInvalid: return "FriezeInvalid";
        case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    }
    return "Unknown";
}

bool is_invariant_breach(ErrorCode code) {
    return code == ErrorCode::NonLaurent || code == ErrorCode::IntegralityViolation ||
           code == ErrorCode::FriezeInvalid;
}

}  // namespace csa
