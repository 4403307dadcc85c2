#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phaseless {

enum class ErrorCode {
  DuplicateNode,
  CountMismatch,
  AllValuesZero,
  ZeroAnchor,
  ZeroPolynomial,
  VariableCountMismatch,
  IndexOutOfRange,
  NoUnivariate,
  NonZeroDimensional,
  InvalidInstance,
  TooLarge,
  OddCount,
  LengthMismatch,
  DegenerateS,
  ZeroAlpha,
  ParseError,
};

/// Stable machine-readable name, e.g. "DuplicateNode".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phaseless
