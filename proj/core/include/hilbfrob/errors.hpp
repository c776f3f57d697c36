#pragma once

#include <stdexcept>
#include <string>

namespace hilbfrob {

enum class ErrorCode {
    REJECTED,
    OWNER_MISMATCH,
    NO_INTEGRAL,
    NO_DIAGONAL,
    NO_HOPF,
    DEGENERATE_PAIRING,
    SIZE_MISMATCH,
    NOT_A_REFINEMENT,
    WEIGHT_MISMATCH,
    NOT_HOMOGENEOUS,
    NOT_INVARIANT,
    BOUND_EXCEEDED,
    BUDGET_EXCEEDED,
    MISSING_LEVEL,
    MISSING_BIDEGREE,
    UNKNOWN_MODEL,
    BAD_INPUT,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::REJECTED: return "REJECTED";
        case ErrorCode::OWNER_MISMATCH: return "OWNER_MISMATCH";
        case ErrorCode::NO_INTEGRAL: return "NO_INTEGRAL";
        case ErrorCode::NO_DIAGONAL: return "NO_DIAGONAL";
        case ErrorCode::NO_HOPF: return "NO_HOPF";
        case ErrorCode::DEGENERATE_PAIRING: return "DEGENERATE_PAIRING";
        case ErrorCode::SIZE_MISMATCH: return "SIZE_MISMATCH";
        case ErrorCode::NOT_A_REFINEMENT: return "NOT_A_REFINEMENT";
        case ErrorCode::WEIGHT_MISMATCH: return "WEIGHT_MISMATCH";
        case ErrorCode::NOT_HOMOGENEOUS: return "NOT_HOMOGENEOUS";
        case ErrorCode::NOT_INVARIANT: return "NOT_INVARIANT";
        case ErrorCode::BOUND_EXCEEDED: return "BOUND_EXCEEDED";
        case ErrorCode::BUDGET_EXCEEDED: return "BUDGET_EXCEEDED";
        case ErrorCode::MISSING_LEVEL: return "MISSING_LEVEL";
        case ErrorCode::MISSING_BIDEGREE: return "MISSING_BIDEGREE";
        case ErrorCode::UNKNOWN_MODEL: return "UNKNOWN_MODEL";
        case ErrorCode::BAD_INPUT: return "BAD_INPUT";
    }
    return "UNKNOWN";
}

} // namespace hilbfrob
