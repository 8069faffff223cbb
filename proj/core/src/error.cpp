#include "liemc/error.hpp"

namespace liemc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::NonMonicPolynomial: return "NonMonicPolynomial";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::UnsupportedInTranscendentalMode: return "UnsupportedInTranscendentalMode";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotKInvariant: return "NotKInvariant";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::BadFirstLine: return "BadFirstLine";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::NotMaximalClass: return "NotMaximalClass";
    case Errc::AlgebraNotValidated: return "AlgebraNotValidated";
    case Errc::GeneratingSpaceTooSmall: return "GeneratingSpaceTooSmall";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::TruncationExceeded: return "TruncationExceeded";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace liemc
