#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iasl {

enum class ErrorCode {
  ParseError,
  InvalidGraph,
  UnknownVertex,
  UnknownEdge,
  MissingLabel,
  DuplicateLabel,
  EmptyLabel,
  LabelOutsideUniverse,
  AdmissibilityViolation,
  NotApLabel,
  BoundExceeded,
  DegreeNotTwo,
  VertexInTriangle,
  EdgeExists,
  InjectivityCollision,
  NotBipartite,
  UnknownTheorem,
  UnknownFamily,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidGraph: return "INVALID_GRAPH";
    case ErrorCode::UnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::UnknownEdge: return "UNKNOWN_EDGE";
    case ErrorCode::MissingLabel: return "MISSING_LABEL";
    case ErrorCode::DuplicateLabel: return "DUPLICATE_LABEL";
    case ErrorCode::EmptyLabel: return "EMPTY_LABEL";
    case ErrorCode::LabelOutsideUniverse: return "LABEL_OUTSIDE_UNIVERSE";
    case ErrorCode::AdmissibilityViolation: return "ADMISSIBILITY_VIOLATION";
    case ErrorCode::NotApLabel: return "NOT_AP_LABEL";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::DegreeNotTwo: return "DEGREE_NOT_TWO";
    case ErrorCode::VertexInTriangle: return "VERTEX_IN_TRIANGLE";
    case ErrorCode::EdgeExists: return "EDGE_EXISTS";
    case ErrorCode::InjectivityCollision: return "INJECTIVITY_COLLISION";
    case ErrorCode::NotBipartite: return "NOT_BIPARTITE";
    case ErrorCode::UnknownTheorem: return "UNKNOWN_THEOREM";
    case ErrorCode::UnknownFamily: return "UNKNOWN_FAMILY";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code's tag so it can be shown as-is.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iasl
