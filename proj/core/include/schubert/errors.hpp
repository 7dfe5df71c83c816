#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Base of every error raised by the library. Catching this is enough to
// distinguish bad input from genuine bugs (std::logic_error and friends).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SCHUBERT_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}      \
  }

// Input parsing and domain violations.
SCHUBERT_DEFINE_ERROR(MalformedPermutation);
SCHUBERT_DEFINE_ERROR(MalformedPartition);
SCHUBERT_DEFINE_ERROR(MalformedChain);
SCHUBERT_DEFINE_ERROR(InvalidPositions);
SCHUBERT_DEFINE_ERROR(NotACode);
SCHUBERT_DEFINE_ERROR(NotGrassmannian);
SCHUBERT_DEFINE_ERROR(TooManyParts);
SCHUBERT_DEFINE_ERROR(DegreeExceedsVariables);
SCHUBERT_DEFINE_ERROR(BadShape);
SCHUBERT_DEFINE_ERROR(KTooSmall);
SCHUBERT_DEFINE_ERROR(StepOutOfBounds);
SCHUBERT_DEFINE_ERROR(MismatchedChains);
SCHUBERT_DEFINE_ERROR(NotClassifiable);
SCHUBERT_DEFINE_ERROR(HypothesisNotMet);

// Arithmetic and algorithmic failures. These indicate either a computation
// that outgrew 64-bit coefficients or a bug in the implementation.
SCHUBERT_DEFINE_ERROR(Overflow);
SCHUBERT_DEFINE_ERROR(ZeroPolynomial);
SCHUBERT_DEFINE_ERROR(NotSchubertSpanned);
SCHUBERT_DEFINE_ERROR(NegativeCoefficient);
SCHUBERT_DEFINE_ERROR(BoundViolation);

#undef SCHUBERT_DEFINE_ERROR

} // namespace schubert
