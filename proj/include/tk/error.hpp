#pragma once

#include <stdexcept>
#include <string>

namespace tk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input / construction errors.
struct MalformedInput : Error { using Error::Error; };
struct NotATournament : Error { using Error::Error; };
struct EmptyTournament : Error { using Error::Error; };
struct AlternativeOutOfRange : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct EmptyUniverse : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct InconsistentAlternativeSets : Error { using Error::Error; };
struct EvenElectorate : Error { using Error::Error; };

// Solver errors.
struct OrderTooLargeForExact : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct NotAProduct : Error { using Error::Error; };

}  // namespace tk
