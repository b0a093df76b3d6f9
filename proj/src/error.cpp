#include "horofan/error.hpp"

namespace horofan {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownDiagram: return "UnknownDiagram";
    case ErrorCode::BadEdge: return "BadEdge";
    case ErrorCode::BadParabolic: return "BadParabolic";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownColour: return "UnknownColour";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::ColourPointOutsideCone: return "ColourPointOutsideCone";
    case ErrorCode::ZeroColourPoint: return "ZeroColourPoint";
    case ErrorCode::OverlappingCones: return "OverlappingCones";
    case ErrorCode::InconsistentColours: return "InconsistentColours";
    case ErrorCode::ColourSetMismatch: return "ColourSetMismatch";
    case ErrorCode::HasTorusFactors: return "HasTorusFactors";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnresolvedIdentifier: return "UnresolvedIdentifier";
    case ErrorCode::MissingColourPoint: return "MissingColourPoint";
  }
  return "Unknown";
}

}  // namespace horofan
