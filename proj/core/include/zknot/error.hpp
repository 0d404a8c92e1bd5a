#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zknot {

enum class ErrorCode {
  NonTriangleInput,
  DuplicateFace,
  EdgeDegreeViolation,
  NonManifoldVertex,
  Disconnected,
  EmptyInput,
  InvalidEdge,
  EdgeNotInFace,
  FaceNotFound,
  InvalidPosition,
  NotZKnotted,
  UnclassifiableMonodromy,
  InvalidSpecialMap,
  LabelCollision,
  ValidationFailure,
  InvalidType,
  MonodromyNotIdentity,
  NoValidMap,
  ParameterOutOfRange,
  SyntaxError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; code() is stable
// and is what the CLI prints in its machine-readable error line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zknot
