#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dilate {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    Singular,
    NotIntegral,
    Reducible,
    NotContained,
    IllDefinedMap,
    CertificationFailed,
    Infeasible,
    BudgetExceeded,
    Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain failure raised by every library operation. `witness` carries a
/// machine-readable counterexample (a vector, a column index, ...) when one
/// exists, otherwise it is empty.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string witness = {})
        : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::string witness_;
};

}  // namespace dilate
