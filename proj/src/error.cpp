#include "seqlab/error.hpp"

namespace seqlab {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotGenerator: return "NotGenerator";
        case Errc::LogOfZero: return "LogOfZero";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::PeriodMismatch: return "PeriodMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::PTooSmall: return "PTooSmall";
        case Errc::ScaleByZero: return "ScaleByZero";
        case Errc::InvalidMatrix: return "InvalidMatrix";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace seqlab
