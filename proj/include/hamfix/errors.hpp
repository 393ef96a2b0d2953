#pragma once

#include <stdexcept>
#include <string>

namespace hamfix {

enum class ErrorCode {
    InvalidBlowupCount,
    LatticeMismatch,
    NoExceptionalBasis,
    InvalidFixedComponent,
    InconsistentFixedPointData,
    InternalArithmeticError,
    NotAMinimum,
    VanishingCycleMismatch,
    AreaContinuityViolation,
    NonDisjointBlowdown,
    OutOfInterval,
    NotAdjacentSlices,
    NotASphereMaximum,
    BoundTooSmall,
    ClassificationMismatch,
    CapacityFormulaInapplicable,
    NotDelzant,
    NotBalanced,
    NotReflexive,
    NoMatchingTFD,
    InvalidInput,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hamfix
