#ifndef UNITONLAB_ERRORS_HPP_
#define UNITONLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace unitonlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define UNITONLAB_DEFINE_ERROR(NAME)                     \
  struct NAME : Error {                                  \
    explicit NAME(const std::string& what = #NAME)       \
        : Error(std::string(#NAME) + ": " + what) {}     \
  }

UNITONLAB_DEFINE_ERROR(DivisionByZeroFunction);
UNITONLAB_DEFINE_ERROR(PoleAtPoint);
UNITONLAB_DEFINE_ERROR(SingularMatrixFunction);
UNITONLAB_DEFINE_ERROR(DimensionMismatch);
UNITONLAB_DEFINE_ERROR(EvalAtZeroWithNegativePowers);
UNITONLAB_DEFINE_ERROR(NonUnitaryLoop);
UNITONLAB_DEFINE_ERROR(ZeroVector);
UNITONLAB_DEFINE_ERROR(NonUnitarySample);
UNITONLAB_DEFINE_ERROR(UnboundedDensity);
UNITONLAB_DEFINE_ERROR(IllConditioned);
UNITONLAB_DEFINE_ERROR(NonzeroIndicesWhenForbidden);
UNITONLAB_DEFINE_ERROR(NonTrivialIndices);
UNITONLAB_DEFINE_ERROR(RankDeficient);
UNITONLAB_DEFINE_ERROR(ValidationFailed);
UNITONLAB_DEFINE_ERROR(PoleOnCircle);
UNITONLAB_DEFINE_ERROR(SingularFrame);
UNITONLAB_DEFINE_ERROR(GoldenMismatch);
UNITONLAB_DEFINE_ERROR(ParseError);

#undef UNITONLAB_DEFINE_ERROR

}  // namespace unitonlab

#endif
