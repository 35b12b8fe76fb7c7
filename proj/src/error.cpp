#include "exceptio/error.hpp"

namespace exceptio {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyCoefficients: return "EmptyCoefficients";
    case Errc::ZeroFactor: return "ZeroFactor";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroModP: return "ZeroModP";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonMonic: return "NonMonic";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::ZeroResultant: return "ZeroResultant";
    case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::ParseError: return "ParseError";
    case Errc::LimitTooLarge: return "LimitTooLarge";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::NotIndexTwo: return "NotIndexTwo";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::BadParameters: return "BadParameters";
    case Errc::EmptySet: return "EmptySet";
    case Errc::InvalidRadicand: return "InvalidRadicand";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::EvenOrCompositeP: return "EvenOrCompositeP";
    case Errc::NotCubic: return "NotCubic";
    case Errc::SquareDiscriminant: return "SquareDiscriminant";
    case Errc::ReducibleCubic: return "ReducibleCubic";
    case Errc::NoCandidateInRange: return "NoCandidateInRange";
    case Errc::IoError: return "IoError";
    case Errc::CorruptCacheEntry: return "CorruptCacheEntry";
  }
  return "Unknown";
}

}  // namespace exceptio
