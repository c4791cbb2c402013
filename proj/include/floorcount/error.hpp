#pragma once

#include <stdexcept>
#include <string>

namespace floorcount {

enum class Errc {
  InvalidDegree,
  ZeroFlowEdge,
  InvalidDiagram,
  InvalidLabels,
  InfeasibleProblem,
  ConstraintCountMismatch,
  UnsupportedGenus,
  NoSplittableConstraint,
  IntegralityFailure,
  DegreeTooLarge,
  ParseError,
};

const char* errc_name(Errc code);

// All library failures are reported through this type. `detail` carries the
// offending index (edge, vertex, degree) where one exists, -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, long detail = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long detail_;
};

}  // namespace floorcount
