// Exception types thrown across the library. All derive from entfluc::Error
// so callers can catch the whole family at one choke point.

#pragma once

#include <stdexcept>
#include <string>

namespace entfluc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ENTFLUC_DEFINE_ERROR(NAME)                      \
  class NAME : public Error {                           \
   public:                                              \
    explicit NAME(const std::string& what) : Error(what) {} \
  }

ENTFLUC_DEFINE_ERROR(DimensionMismatch);
ENTFLUC_DEFINE_ERROR(InvalidDimension);
ENTFLUC_DEFINE_ERROR(NotHermitian);
ENTFLUC_DEFINE_ERROR(NotDensityLike);
ENTFLUC_DEFINE_ERROR(NotPositive);
ENTFLUC_DEFINE_ERROR(NotNormalized);
ENTFLUC_DEFINE_ERROR(RankTolerationFailure);
ENTFLUC_DEFINE_ERROR(RankTooSmall);
ENTFLUC_DEFINE_ERROR(OutOfRange);
ENTFLUC_DEFINE_ERROR(SpectrumOutOfRange);
ENTFLUC_DEFINE_ERROR(BlockTooLong);
ENTFLUC_DEFINE_ERROR(DegenerateLog);
ENTFLUC_DEFINE_ERROR(InvalidFilling);
ENTFLUC_DEFINE_ERROR(ParseError);

#undef ENTFLUC_DEFINE_ERROR

}  // namespace entfluc
