#pragma once

#include <stdexcept>
#include <string>

namespace qgr {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group construction / word evaluation
struct DegreeMismatch : Error { using Error::Error; };
struct ClosureExceeded : Error { using Error::Error; };
struct UnassignedLabel : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };

// linear algebra
struct NonSquare : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotHomomorphism : Error { using Error::Error; };
struct SingularFactorization : Error { using Error::Error; };

// representation synthesis
struct TooLarge : Error { using Error::Error; };
struct NotFaithful : Error { using Error::Error; };
struct DimTooSmall : Error { using Error::Error; };
struct SearchFailed : Error { using Error::Error; };

// circuits
struct TooWide : Error { using Error::Error; };
struct NotPowerOfTwo : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };

// vqa
struct LengthMismatch : Error { using Error::Error; };
struct RelationViolation : Error { using Error::Error; };

// applications
struct BadTarget : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };

// i/o
struct ParseError : Error { using Error::Error; };

}  // namespace qgr
