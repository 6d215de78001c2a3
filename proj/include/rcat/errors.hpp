#pragma once

#include <stdexcept>
#include <string>

namespace rcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RCAT_ERROR(Name)                 \
  struct Name : Error {                  \
    using Error::Error;                  \
  }

// malformed category data; carries a positional message
RCAT_ERROR(MalformedTable);
RCAT_ERROR(UnknownMorphism);
RCAT_ERROR(UnknownObject);
RCAT_ERROR(NotParallel);
RCAT_ERROR(ShapeMismatch);
RCAT_ERROR(CapExceeded);
RCAT_ERROR(NoZero);
RCAT_ERROR(NoDecision);
RCAT_ERROR(InvalidWitness);
RCAT_ERROR(MissingBinaryDecision);
RCAT_ERROR(NoProducts);
RCAT_ERROR(NotSplit);
RCAT_ERROR(NoTotalLimit);
RCAT_ERROR(NotSeparable);
RCAT_ERROR(InvalidDistributiveData);
// a structure (coproducts, products, ...) is missing data it needs
RCAT_ERROR(StructureError);
// an internal consistency assertion between two computations failed
RCAT_ERROR(AssertionFailure);

#undef RCAT_ERROR

}  // namespace rcat
