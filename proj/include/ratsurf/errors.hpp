#ifndef RATSURF_ERRORS_HPP
#define RATSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratsurf {

// Mirrors ratsurf_status in ratsurf.h; the C layer maps exceptions onto these.
enum class ErrorCode {
  invalid_argument = 1,
  pole = 2,
  overflow = 3,
  indeterminacy = 4,
  periodicity = 5,
  chart_domain = 6,
  extrapolation = 7,
  degenerate = 8,
  not_saddle = 9,
  io = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define RATSURF_DEFINE_ERROR(Name, Code)                                  \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

RATSURF_DEFINE_ERROR(InvalidArgument, invalid_argument)
RATSURF_DEFINE_ERROR(PoleError, pole)
RATSURF_DEFINE_ERROR(OverflowError, overflow)
RATSURF_DEFINE_ERROR(IndeterminacyError, indeterminacy)
RATSURF_DEFINE_ERROR(PeriodicityError, periodicity)
RATSURF_DEFINE_ERROR(ChartDomainError, chart_domain)
RATSURF_DEFINE_ERROR(ExtrapolationError, extrapolation)
RATSURF_DEFINE_ERROR(DegenerateError, degenerate)
RATSURF_DEFINE_ERROR(NotSaddleError, not_saddle)
RATSURF_DEFINE_ERROR(IoError, io)

#undef RATSURF_DEFINE_ERROR

}  // namespace ratsurf

#endif  // RATSURF_ERRORS_HPP
