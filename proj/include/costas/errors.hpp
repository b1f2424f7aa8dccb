#pragma once

#include <stdexcept>

namespace costas {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COSTAS_ERROR_TYPE(NAME)   \
  class NAME : public Error {     \
   public:                        \
    using Error::Error;           \
  }

// finite fields
COSTAS_ERROR_TYPE(NotPrimeError);
COSTAS_ERROR_TYPE(NotPrimitiveError);
COSTAS_ERROR_TYPE(ZeroArgumentError);
COSTAS_ERROR_TYPE(FieldMismatchError);

// permutations / equivalence classes
COSTAS_ERROR_TYPE(OrderTooSmallError);

// generators
COSTAS_ERROR_TYPE(BadShiftError);
COSTAS_ERROR_TYPE(W3NotApplicableError);
COSTAS_ERROR_TYPE(ConditionUnmetError);
COSTAS_ERROR_TYPE(FieldTooSmallError);

// enumeration
COSTAS_ERROR_TYPE(OrderTooLargeError);
COSTAS_ERROR_TYPE(InconsistentPrefixError);

// correlation
COSTAS_ERROR_TYPE(OrderMismatchError);
COSTAS_ERROR_TYPE(IdenticalInputsError);

// analysis
COSTAS_ERROR_TYPE(GcdViolationError);
COSTAS_ERROR_TYPE(OddOrderError);

// rulers / rectangles / honeycombs
COSTAS_ERROR_TYPE(EvenOrderError);
COSTAS_ERROR_TYPE(NotCostasError);
COSTAS_ERROR_TYPE(TooFewMarksError);
COSTAS_ERROR_TYPE(TooFewDotsError);
COSTAS_ERROR_TYPE(TooLargeError);
COSTAS_ERROR_TYPE(SizeMismatchError);

#undef COSTAS_ERROR_TYPE

}  // namespace costas
