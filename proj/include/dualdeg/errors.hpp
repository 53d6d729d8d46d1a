#pragma once

#include <stdexcept>
#include <string>

namespace dualdeg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ArityError : Error { using Error::Error; };
struct DegenerateNodes : Error { using Error::Error; };
struct MalformedLP : Error { using Error::Error; };
struct EmptyDomain : Error { using Error::Error; };
struct NotADualWitness : Error { using Error::Error; };
struct AlphaTooLarge : Error { using Error::Error; };
struct WrongWitnessKind : Error { using Error::Error; };
struct BadApproximator : Error { using Error::Error; };
struct NotOrthogonalizing : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct Unconditionable : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };

}  // namespace dualdeg
