#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopdeg {

enum class ErrorCode {
    NegativeEntry,
    NotSorted,
    ZeroEntry,
    Underflow,
    DegreeExceedsOrder,
    InfeasibleSequence,
    InternalPatchFailure,
    PartSizeMismatch,
    InvalidGraph,
    BudgetExceeded,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace loopdeg
