#pragma once

// Enumeration of floor diagrams and their markings, vertex multiplicities,
// and the marked-diagram sum giving N_{d,0}(k; 1^{3d-1-k}).

#include <functional>
#include <string>
#include <vector>

#include "floorcount/diagram.hpp"
#include "floorcount/hurwitz.hpp"
#include "floorcount/rational.hpp"

namespace floorcount {

/// Every degree-d floor diagram up to isomorphism, ordered by canonical key.
/// Throws Error(InvalidDegree) for d < 1.
std::vector<FloorDiagram> enumerate_diagrams(int d);

/// Valid markings of `d`, one per isomorphism class (deduplicated by the
/// canonical key of the marked diagram), ordered by that key.
std::vector<Marking> enumerate_markings(const FloorDiagram& d,
                                        const LabelPartition& labels);

/// Visits every valid marking (all labelings, no quotient by Aut).
void for_each_valid_marking(const FloorDiagram& d, const LabelPartition& labels,
                            const std::function<void(const Marking&)>& visit);

/// White vertex multiplicity from its local data.
Rational white_vertex_multiplicity(int div, int valence, bool point_is_min);

Rational white_multiplicity(const FloorDiagram& d, const Marking& m, int v,
                            const LabelPartition& labels);

enum class BlackCase { Point, Top, Generic };

const char* black_case_name(BlackCase c);

/// Local data of a black vertex: adjacent whites sorted by their smallest
/// label, signed weights, chamber degrees and label counts per chamber.
struct BlackProfile {
  int valence = 0;
  std::vector<int> ordered_whites;
  std::vector<int> eps;       // +1 iff the edge points into the black vertex
  std::vector<int> delta;     // delta(0..s)
  std::vector<int> ntilde;    // labels of v per chamber
  std::vector<int> ncum;      // ncum[i] = ntilde(0) + ... + ntilde(i)
  BlackCase kind = BlackCase::Generic;
  int point_label = 0;        // Point case only
  int point_chamber = -1;     // i_j of the point label

  int ncum_before(int i) const { return i == 0 ? 0 : ncum[i - 1]; }
  /// ntilde with one label removed from chamber i.
  HurwitzProblem problem_without(int i) const;
};

/// Throws Error(IntegralityFailure) if delta(s) != 0.
BlackProfile black_profile(const FloorDiagram& d, const Marking& m, int v,
                           const LabelPartition& labels);

Rational black_multiplicity(const FloorDiagram& d, const Marking& m, int v,
                            const LabelPartition& labels);

/// Product of edge weights and all vertex multiplicities. Can be 0.
Rational marked_multiplicity(const FloorDiagram& d, const Marking& m,
                             const LabelPartition& labels);

/// Sum of marked multiplicities over all isomorphism classes of marked
/// degree-d diagrams. OpenMP-parallel over (diagram, marking prefix) tasks.
Rational count_fd(int d, const LabelPartition& labels);

/// Single-threaded reference for count_fd.
Rational count_fd_serial(int d, const LabelPartition& labels);

struct MarkedTerm {
  Marking marking;
  Rational multiplicity;
};

struct DiagramTerms {
  FloorDiagram diagram;
  std::vector<MarkedTerm> markings;
};

/// Every diagram with its marking classes and their multiplicities, in
/// canonical order; the listing behind the `diagrams` command.
std::vector<DiagramTerms> marked_diagrams(int d, const LabelPartition& labels);

struct MultiplicityAudit {
  long markings = 0;
  long negative = 0;
  long black_profiles = 0;
  Rational total;
};

/// Evaluates every valid marking, counting negative multiplicities and
/// black profiles (each profile re-checks delta(s) == 0).
MultiplicityAudit audit_multiplicities(int d, const LabelPartition& labels);

}  // namespace floorcount
