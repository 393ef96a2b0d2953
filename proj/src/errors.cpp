#include <sstream>

#include "hamfix/errors.hpp"
#include "hamfix/rational.hpp"

namespace hamfix {

const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidBlowupCount: return "InvalidBlowupCount";
        case ErrorCode::LatticeMismatch: return "LatticeMismatch";
        case ErrorCode::NoExceptionalBasis: return "NoExceptionalBasis";
        case ErrorCode::InvalidFixedComponent: return "InvalidFixedComponent";
        case ErrorCode::InconsistentFixedPointData: return "InconsistentFixedPointData";
        case ErrorCode::InternalArithmeticError: return "InternalArithmeticError";
        case ErrorCode::NotAMinimum: return "NotAMinimum";
        case ErrorCode::VanishingCycleMismatch: return "VanishingCycleMismatch";
        case ErrorCode::AreaContinuityViolation: return "AreaContinuityViolation";
        case ErrorCode::NonDisjointBlowdown: return "NonDisjointBlowdown";
        case ErrorCode::OutOfInterval: return "OutOfInterval";
        case ErrorCode::NotAdjacentSlices: return "NotAdjacentSlices";
        case ErrorCode::NotASphereMaximum: return "NotASphereMaximum";
        case ErrorCode::BoundTooSmall: return "BoundTooSmall";
        case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
        case ErrorCode::CapacityFormulaInapplicable: return "CapacityFormulaInapplicable";
        case ErrorCode::NotDelzant: return "NotDelzant";
        case ErrorCode::NotBalanced: return "NotBalanced";
        case ErrorCode::NotReflexive: return "NotReflexive";
        case ErrorCode::NoMatchingTFD: return "NoMatchingTFD";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

long long to_ll(const Rational& r) {
    if (!is_integer(r)) throw Error(ErrorCode::InternalArithmeticError, "not an integer: " + to_string(r));
    return numerator(r).convert_to<long long>();
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace hamfix
