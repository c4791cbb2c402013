#pragma once

// Genus-0 characteristic numbers N_{d,0}(k; d_1, ..., d_m) of the plane:
// curves of degree d through k points and tangent to m curves of degrees d_i.
// Tangency to a curve of degree D > 1 is reduced to lower degrees by
//   N(k; r, D) = 2 d' d'' N(k+1; r) + N(k; r, d') + N(k; r, d''),  D = d'+d'',
// and the all-lines case is the floor diagram sum.

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "floorcount/rational.hpp"

namespace floorcount {

struct CharProblem {
  int degree = 1;
  int points = 0;
  std::vector<int> tangencies;
  int genus = 0;

  /// Throws ConstraintCountMismatch, UnsupportedGenus or InvalidDegree.
  void check() const;
  /// Same problem with tangencies sorted; used as the memo key.
  CharProblem normalized() const;

  friend bool operator==(const CharProblem&, const CharProblem&) = default;
  friend auto operator<=>(const CharProblem&, const CharProblem&) = default;
};

struct ExpansionTerm {
  long coefficient;
  CharProblem problem;
};

/// Splits tangency `index` of degree D = first + second into the three
/// terms of the degeneration formula. Throws NoSplittableConstraint when
/// the chosen degree is 1 or the split does not add up.
std::vector<ExpansionTerm> expand_step(const CharProblem& p, std::size_t index,
                                       int first, int second);

/// Chooses which constraint to split and how: (index, (d', d'')).
using SplitPolicy =
    std::function<std::pair<std::size_t, std::pair<int, int>>(const CharProblem&)>;

/// Largest tangency degree D, split as (D - 1, 1).
SplitPolicy largest_first_policy();

/// Memoizing evaluator; safe to share across threads.
class CharacteristicSolver {
 public:
  explicit CharacteristicSolver(SplitPolicy policy = largest_first_policy());

  /// Throws IntegralityFailure if the exact result is not a non-negative
  /// integer.
  BigInt solve(const CharProblem& p);

  std::size_t memo_size() const;

 private:
  Rational evaluate(const CharProblem& p);

  SplitPolicy policy_;
  mutable std::mutex mutex_;
  std::map<CharProblem, Rational> memo_;
};

/// Uses a process-wide solver with the default policy.
BigInt characteristic_number(const CharProblem& p);

/// Default line labels for k points: {k+1, ..., 3d-1}.
std::vector<int> default_lines(int degree, int points);

}  // namespace floorcount
