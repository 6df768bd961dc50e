#pragma once

#include <stdexcept>
#include <string>

namespace wrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WREP_DEFINE_ERROR(Name)        \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

WREP_DEFINE_ERROR(DimensionError)
WREP_DEFINE_ERROR(NotSurjectiveError)
WREP_DEFINE_ERROR(PinningError)
WREP_DEFINE_ERROR(NotInvertibleError)
WREP_DEFINE_ERROR(StructureError)
WREP_DEFINE_ERROR(CompositionError)
WREP_DEFINE_ERROR(DegreeError)
WREP_DEFINE_ERROR(ValidationError)
WREP_DEFINE_ERROR(NotInducedError)
WREP_DEFINE_ERROR(UsageError)
WREP_DEFINE_ERROR(ParseError)

#undef WREP_DEFINE_ERROR

}  // namespace wrep
