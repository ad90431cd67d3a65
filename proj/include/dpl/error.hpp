#ifndef DPL_ERROR_HPP
#define DPL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpl {

enum class ErrorKind {
  ParseError,
  NonIncreasingDomain,
  ZeroSlopeSegment,
  DuplicateVertexValue,
  InfeasibleParameters,
  EndpointNotRegular,
  NoOppositeArc,
  PreconditionUnmet,
  DegeneratePosition,
  Infeasible,
  BadParameter,
  InvalidTable,
  DanglingLabel,
  DoubleBirth,
  EventOrderViolation,
  CertificateFailure,
};

std::string_view to_string(ErrorKind kind);

// Every validation failure in the library is reported through this type;
// kind() is what the CLI turns into a machine-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dpl

#endif  // DPL_ERROR_HPP
