#include "phaseless/error.hpp"

namespace phaseless {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::AllValuesZero: return "AllValuesZero";
    case ErrorCode::ZeroAnchor: return "ZeroAnchor";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoUnivariate: return "NoUnivariate";
    case ErrorCode::NonZeroDimensional: return "NonZeroDimensional";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OddCount: return "OddCount";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateS: return "DegenerateS";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace phaseless
