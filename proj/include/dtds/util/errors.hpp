#pragma once

#include <stdexcept>
#include <string>

namespace dtds {

enum class ErrorCode {
  MalformedDocument,
  InvalidAttribute,
  MissingIdOrType,
  IdMismatch,
  ValidationFailed,
  NotFound,
  AlreadyExists,
  AllStale,
  EmptyFilter,
  EmptyBatch,
  InvalidTarget,
  InvalidEndpoint,
  InvalidTenant,
  TooLarge,
  IntegrityError,
  UnknownMethod,
  MalformedTemplate,
  OutOfRange,
  UnknownLane,
  EmptyNetwork,
  SceneNotFound,
  SceneInvalid,
  SceneHeadMissing,
  BrokerUnreachable,
  ServerUnreachable,
  BindFailure,
  NonMonotonicTime,
  FederationFailed,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Domain error carried across module boundaries; the HTTP layer maps
/// code() to a status and a problem document.
class DtdsError : public std::runtime_error {
public:
  DtdsError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw DtdsError(code, message);
}

}  // namespace dtds
