#pragma once

#include <stdexcept>
#include <string>

namespace ico {

// Base for every failure raised by this library. Count mismatches and
// failed verifications signal bugs or data errors, not user mistakes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ICO_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

ICO_DEFINE_ERROR(DivisionByZero);
ICO_DEFINE_ERROR(NotIcosahedralTrace);
ICO_DEFINE_ERROR(ParseError);
ICO_DEFINE_ERROR(ClosureOverflow);
ICO_DEFINE_ERROR(CountMismatch);
ICO_DEFINE_ERROR(OrbitCountMismatch);
ICO_DEFINE_ERROR(NonIntegralGenus);
ICO_DEFINE_ERROR(NotReduced);
ICO_DEFINE_ERROR(InconsistentWord);
ICO_DEFINE_ERROR(RepNotInS);
ICO_DEFINE_ERROR(RowMismatch);
ICO_DEFINE_ERROR(ModulusMismatch);
ICO_DEFINE_ERROR(DegenerateParameterization);
ICO_DEFINE_ERROR(VerificationFailed);
ICO_DEFINE_ERROR(NotACommonZero);
ICO_DEFINE_ERROR(LimitUndefined);
ICO_DEFINE_ERROR(RecognitionFailed);
ICO_DEFINE_ERROR(MatchFailed);
ICO_DEFINE_ERROR(CacheError);

#undef ICO_DEFINE_ERROR

}  // namespace ico
