#pragma once

#include <stdexcept>
#include <string>

namespace mgreg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MGREG_ERROR(Name)                                   \
  class Name : public Error {                               \
   public:                                                  \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

MGREG_ERROR(NoPositiveFunctional);
MGREG_ERROR(InsufficientPadding);
MGREG_ERROR(BoxMismatch);
MGREG_ERROR(NotStable);
MGREG_ERROR(NonMonomialInput);
MGREG_ERROR(InsufficientTable);
MGREG_ERROR(UncertifiedEntry);
MGREG_ERROR(NotPolynomial);
MGREG_ERROR(HypothesisFailed);
MGREG_ERROR(ParseError);
MGREG_ERROR(SchemaError);

#undef MGREG_ERROR

}  // namespace mgreg
