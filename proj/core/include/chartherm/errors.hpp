#pragma once

#include <stdexcept>
#include <string>

namespace chartherm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHARTHERM_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

// series_core
CHARTHERM_DEFINE_ERROR(DivisionByNonUnit);
CHARTHERM_DEFINE_ERROR(NonzeroConstantTerm);
CHARTHERM_DEFINE_ERROR(ParseError);

// genus
CHARTHERM_DEFINE_ERROR(InsufficientRoots);
CHARTHERM_DEFINE_ERROR(MissingCharacteristicNumber);

// thermo, trace_geom, asymmetry
CHARTHERM_DEFINE_ERROR(NonPositiveArgument);
CHARTHERM_DEFINE_ERROR(EmptySpectrum);
CHARTHERM_DEFINE_ERROR(InvalidSpectrum);
CHARTHERM_DEFINE_ERROR(UnboundedNonCanonical);
CHARTHERM_DEFINE_ERROR(ZeroState);
CHARTHERM_DEFINE_ERROR(LengthMismatch);
CHARTHERM_DEFINE_ERROR(OutOfDomain);
CHARTHERM_DEFINE_ERROR(QuadratureNonConvergence);

#undef CHARTHERM_DEFINE_ERROR

}  // namespace chartherm
