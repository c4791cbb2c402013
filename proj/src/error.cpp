#include "floorcount/error.hpp"

namespace floorcount {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::ZeroFlowEdge: return "ZeroFlowEdge";
    case Errc::InvalidDiagram: return "InvalidDiagram";
    case Errc::InvalidLabels: return "InvalidLabels";
    case Errc::InfeasibleProblem: return "InfeasibleProblem";
    case Errc::ConstraintCountMismatch: return "ConstraintCountMismatch";
    case Errc::UnsupportedGenus: return "UnsupportedGenus";
    case Errc::NoSplittableConstraint: return "NoSplittableConstraint";
    case Errc::IntegralityFailure: return "IntegralityFailure";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace floorcount
