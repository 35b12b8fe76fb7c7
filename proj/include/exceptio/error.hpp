#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exceptio {

// Machine-readable error codes. The CLI reports these verbatim.
enum class Errc {
  EmptyCoefficients,
  ZeroFactor,
  NotPrime,
  ZeroModP,
  ZeroPolynomial,
  NonMonic,
  DegreeZero,
  NotSquareFree,
  ZeroResultant,
  NonIntegerCoefficient,
  ParseError,
  LimitTooLarge,
  ModulusTooLarge,
  GroupTooLarge,
  DegreeMismatch,
  PointOutOfRange,
  NotIndexTwo,
  NotTransitive,
  DegreeTooSmall,
  DegreeTooLarge,
  BadParameters,
  EmptySet,
  InvalidRadicand,
  SupportMismatch,
  EnumerationTooLarge,
  DimensionTooLarge,
  EvenOrCompositeP,
  NotCubic,
  SquareDiscriminant,
  ReducibleCubic,
  NoCandidateInRange,
  IoError,
  CorruptCacheEntry,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace exceptio
