#pragma once

#include <stdexcept>
#include <string>

namespace wfs {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WFS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(what) {}      \
  }

WFS_DEFINE_ERROR(BadConfig);
WFS_DEFINE_ERROR(DivisionByZero);
WFS_DEFINE_ERROR(PrecisionLoss);
WFS_DEFINE_ERROR(ZeroInput);
WFS_DEFINE_ERROR(NotASquare);
WFS_DEFINE_ERROR(DegenerateForm);
WFS_DEFINE_ERROR(SingularMatrix);
WFS_DEFINE_ERROR(UnknownName);
WFS_DEFINE_ERROR(NotInLevel);
WFS_DEFINE_ERROR(NegativeValuation);
WFS_DEFINE_ERROR(NotNilpotent);
WFS_DEFINE_ERROR(InconsistentOrder);
WFS_DEFINE_ERROR(PreconditionViolated);
WFS_DEFINE_ERROR(NotRepresentable);
WFS_DEFINE_ERROR(NoCurvePoint);

#undef WFS_DEFINE_ERROR

}  // namespace wfs
