#include "zknot/error.hpp"

namespace zknot {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonTriangleInput: return "NonTriangleInput";
    case ErrorCode::DuplicateFace: return "DuplicateFace";
    case ErrorCode::EdgeDegreeViolation: return "EdgeDegreeViolation";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::EdgeNotInFace: return "EdgeNotInFace";
    case ErrorCode::FaceNotFound: return "FaceNotFound";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::NotZKnotted: return "NotZKnotted";
    case ErrorCode::UnclassifiableMonodromy: return "UnclassifiableMonodromy";
    case ErrorCode::InvalidSpecialMap: return "InvalidSpecialMap";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::MonodromyNotIdentity: return "MonodromyNotIdentity";
    case ErrorCode::NoValidMap: return "NoValidMap";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace zknot
