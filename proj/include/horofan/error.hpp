#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace horofan {

enum class ErrorCode {
  // diagrams
  UnknownDiagram,
  BadEdge,
  BadParabolic,
  UnknownNode,
  UnknownColour,
  // lattices and cones
  DimensionMismatch,
  ZeroVector,
  NotStronglyConvex,
  NotAFace,
  // coloured fans
  ColourPointOutsideCone,
  ZeroColourPoint,
  OverlappingCones,
  InconsistentColours,
  ColourSetMismatch,
  // preconditions
  HasTorusFactors,
  InvalidArgument,
  // documents
  SyntaxError,
  UnresolvedIdentifier,
  MissingColourPoint,
};

/// Stable identifier, used in reports and by the C API.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace horofan
