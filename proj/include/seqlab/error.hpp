#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

enum class Errc {
    NotPrime,
    NotGenerator,
    LogOfZero,
    DivisionByZero,
    PeriodMismatch,
    IndexOutOfRange,
    PTooSmall,
    ScaleByZero,
    InvalidMatrix,
    FieldMismatch,
    UnsupportedFamily,
    InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Every library failure is reported through this type; the code identifies the
/// contract that was violated and what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace seqlab
