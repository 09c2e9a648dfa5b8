#pragma once

#include <stdexcept>
#include <string>

namespace csa {

enum class ErrorCode {
    ArityMismatch,
    NotAUnit,
    NotDivisible,
    NonInvertibleImage,
    ParityMismatch,
    ParseError,
    InvalidInput,
    FrozenVertex,
    MultiplicityOutOfRange,
    ConditionCViolated,
    MutationForbidden,
    NonLaurent,
    ZeroBodyDenominator,
    NonInvertible,
    NonInvertibleWest,
    FriezeInvalid,
    IntegralityViolation,
};

const char* error_name(ErrorCode code);

// Errors that indicate a broken theorem-level invariant rather than bad input.
bool is_invariant_breach(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace csa
