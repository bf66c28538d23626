#include "apuniform/error.hpp"

namespace apu {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooSmall: return "TooSmall";
    case Errc::OverlappingIntervals: return "OverlappingIntervals";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::ZeroFrequency: return "ZeroFrequency";
    case Errc::DegenerateQuadratic: return "DegenerateQuadratic";
    case Errc::NotIndicator: return "NotIndicator";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::InvalidDesign: return "InvalidDesign";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace apu
