#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liemc {

enum class Errc {
  NonPrimeCharacteristic,
  ReduciblePolynomial,
  NonMonicPolynomial,
  ZeroInverse,
  DegreeCapExceeded,
  TowerMismatch,
  UnsupportedInTranscendentalMode,
  AmbientMismatch,
  NotKInvariant,
  TruncationTooSmall,
  BadFirstLine,
  LengthMismatch,
  DegreeOverflow,
  DegreeOutOfRange,
  NotMaximalClass,
  AlgebraNotValidated,
  GeneratingSpaceTooSmall,
  ZeroElement,
  TruncationExceeded,
  DegreeTooSmall,
  UnknownPreset,
  InvalidInput,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace liemc
