#include "dtds/util/errors.hpp"

namespace dtds {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::InvalidAttribute: return "InvalidAttribute";
    case ErrorCode::MissingIdOrType: return "MissingIdOrType";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::AlreadyExists: return "AlreadyExists";
    case ErrorCode::AllStale: return "AllStale";
    case ErrorCode::EmptyFilter: return "EmptyFilter";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::InvalidEndpoint: return "InvalidEndpoint";
    case ErrorCode::InvalidTenant: return "InvalidTenant";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IntegrityError: return "IntegrityError";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::MalformedTemplate: return "MalformedTemplate";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownLane: return "UnknownLane";
    case ErrorCode::EmptyNetwork: return "EmptyNetwork";
    case ErrorCode::SceneNotFound: return "SceneNotFound";
    case ErrorCode::SceneInvalid: return "SceneInvalid";
    case ErrorCode::SceneHeadMissing: return "SceneHeadMissing";
    case ErrorCode::BrokerUnreachable: return "BrokerUnreachable";
    case ErrorCode::ServerUnreachable: return "ServerUnreachable";
    case ErrorCode::BindFailure: return "BindFailure";
    case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::FederationFailed: return "FederationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace dtds
