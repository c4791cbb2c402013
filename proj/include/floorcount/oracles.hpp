#pragma once

// Independent checks for the main engine: brute-force monodromy counts for
// closed Hurwitz numbers, Kontsevich's recursion for the point-only case,
// and the L^comb-choice audit of the floor diagram sum.

#include <cstdint>
#include <optional>
#include <vector>

#include "floorcount/rational.hpp"

namespace floorcount {

/// (1/d!) * #{transitive tuples of 2d-2 transpositions in S_d with product
/// identity}. OpenMP-parallel. Throws DegreeTooLarge for d > 5.
Rational monodromy_hurwitz(int d);

/// Single-threaded reference for monodromy_hurwitz.
Rational monodromy_hurwitz_serial(int d);

/// Number of rational degree-d curves through 3d-1 general points.
BigInt kontsevich_gw(int d);

struct AuditReport {
  int degree = 0;
  int cardinality = 0;
  bool exhaustive = false;
  bool pass = true;
  long subsets_checked = 0;
  Rational value;  // count for the first subset checked
  std::optional<std::vector<int>> counterexample;
  Rational counterexample_value;
};

/// Evaluates count_fd for line-label sets of the given size: all of them if
/// there are at most 200, otherwise `trials` random ones drawn with `seed`.
AuditReport invariance_audit(int d, int cardinality, int trials = 50,
                             std::uint64_t seed = 1);

}  // namespace floorcount
