#pragma once

// Open Hurwitz numbers H(delta, n), computed by enumerating tropical covers
// of the real line, and the closed numbers H(d) by formula.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "floorcount/rational.hpp"

namespace floorcount {

/// H(d) = d^(d-3) (2d-2)! / d!. Throws Error(InvalidDegree) for d < 1.
Rational closed_hurwitz(int d);

/// Chamber degrees delta(0..s) and branch point counts n(0..s) for s circles.
struct HurwitzProblem {
  std::vector<int> delta;
  std::vector<int> branch;

  int circles() const { return static_cast<int>(delta.size()) - 1; }

  /// Non-negative data, consecutive degrees distinct, Riemann-Hurwitz count.
  bool feasible() const;

  static HurwitzProblem closed(int d) { return {{d}, {2 * d - 2}}; }

  friend bool operator==(const HurwitzProblem&, const HurwitzProblem&) = default;
  friend auto operator<=>(const HurwitzProblem&, const HurwitzProblem&) = default;
};

enum class CoverEventKind { Split, Merge, BoundaryOpen, BoundaryClose };

const char* event_kind_name(CoverEventKind k);

/// What happens above one marked point of the line. Positions run left to
/// right over all branch points and circles; `chamber` is the chamber index
/// for branch points and the circle index (1..s) for boundary events.
/// weights: Split {w, a, b}; Merge {a, b, a+b}; BoundaryOpen/Close {w}.
struct CoverEvent {
  int position;
  CoverEventKind kind;
  int chamber;
  std::vector<int> weights;
};

/// Edge between two event positions; `from` may be kMinusInfinity and `to`
/// kPlusInfinity for unbounded ends.
struct CoverEdge {
  static constexpr int kMinusInfinity = -1;
  static constexpr int kPlusInfinity = std::numeric_limits<int>::max();

  int from;
  int to;
  int weight;

  bool is_end() const { return from == kMinusInfinity || to == kPlusInfinity; }

  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

struct TropicalCover {
  std::vector<CoverEvent> events;
  std::vector<CoverEdge> edges;  // sorted, so equal covers compare equal
  Rational mu;                   // edge weight product over boundary factors
  int aut_order = 1;             // 2^(twin weight-1 end pairs)

  /// Canonical key of the isomorphism class.
  std::string key() const;
};

struct CoverSearchOptions {
  /// Non-zero: shuffle the order in which moves are tried at each branch
  /// point. The resulting set of covers must not depend on it.
  std::uint64_t shuffle_seed = 0;
};

/// One representative per isomorphism class, ordered by key. Throws
/// Error(InfeasibleProblem) when !problem.feasible().
std::vector<TropicalCover> enumerate_tropical_covers(
    const HurwitzProblem& problem, const CoverSearchOptions& options = {});

/// Sum of mu / aut_order over the covers, 0 for infeasible input.
/// Memoized in a process-wide cache safe for concurrent use.
Rational open_hurwitz(const HurwitzProblem& problem);

/// Same value without touching the cache.
Rational open_hurwitz_uncached(const HurwitzProblem& problem,
                               const CoverSearchOptions& options = {});

std::size_t hurwitz_cache_size();

}  // namespace floorcount
