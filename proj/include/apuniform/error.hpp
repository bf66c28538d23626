#pragma once

#include <stdexcept>
#include <string>

namespace apu {

enum class Errc {
  NotPrime,
  TooSmall,
  OverlappingIntervals,
  InvalidInterval,
  LengthMismatch,
  ModulusMismatch,
  ZeroFrequency,
  DegenerateQuadratic,
  NotIndicator,
  ModulusTooSmall,
  InvalidDesign,
  OutOfDomain,
  ProbabilityOutOfRange,
  TooLarge,
  InvalidArgument,
  ParseError,
  IoFailure,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace apu
