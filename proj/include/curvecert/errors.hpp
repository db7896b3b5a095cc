#pragma once

#include <stdexcept>
#include <string>

namespace curvecert {

// Every error raised by the engine derives from Error so the CLI can map the
// whole family onto exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CURVECERT_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

CURVECERT_DEFINE_ERROR(NotAUnit);
CURVECERT_DEFINE_ERROR(PrecisionExceeded);
CURVECERT_DEFINE_ERROR(PoleAtZero);
CURVECERT_DEFINE_ERROR(NoStabilization);
CURVECERT_DEFINE_ERROR(DegenerateGenerators);
CURVECERT_DEFINE_ERROR(NotTorsionFree);
CURVECERT_DEFINE_ERROR(WindowMismatch);
CURVECERT_DEFINE_ERROR(ZeroDivisorMultiplier);
CURVECERT_DEFINE_ERROR(UnsupportedN);
CURVECERT_DEFINE_ERROR(AmbiguousFingerprint);
CURVECERT_DEFINE_ERROR(NotApplicable);
CURVECERT_DEFINE_ERROR(ParseError);
CURVECERT_DEFINE_ERROR(DomainError);

#undef CURVECERT_DEFINE_ERROR

}  // namespace curvecert
