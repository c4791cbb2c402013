#include "floorcount/charnum.hpp"

#include <algorithm>
#include <numeric>

#include "floorcount/diagram.hpp"
#include "floorcount/error.hpp"
#include "floorcount/floor_diagrams.hpp"

namespace floorcount {

void CharProblem::check() const {
  if (genus != 0) throw Error(Errc::UnsupportedGenus, "only genus 0 is supported", genus);
  if (degree < 1) throw Error(Errc::InvalidDegree, "degree must be positive", degree);
  if (points < 0) {
    throw Error(Errc::ConstraintCountMismatch, "negative number of points", points);
  }
  for (int t : tangencies) {
    if (t < 1) throw Error(Errc::ConstraintCountMismatch, "tangency degrees must be >= 1", t);
  }
  const long total = static_cast<long>(points) + static_cast<long>(tangencies.size());
  if (total != 3L * degree - 1) {
    throw Error(Errc::ConstraintCountMismatch,
                "points + tangencies = " + std::to_string(total) +
                    " but a rational curve of degree " + std::to_string(degree) +
                    " needs 3d-1 = " + std::to_string(3 * degree - 1) + " constraints");
  }
}

CharProblem CharProblem::normalized() const {
  CharProblem p = *this;
  std::sort(p.tangencies.begin(), p.tangencies.end());
  return p;
}

std::vector<ExpansionTerm> expand_step(const CharProblem& p, std::size_t index,
                                       int first, int second) {
  if (index >= p.tangencies.size() || p.tangencies[index] < 2 || first < 1 ||
      second < 1 || first + second != p.tangencies[index]) {
    throw Error(Errc::NoSplittableConstraint,
                "constraint cannot be split as requested", static_cast<long>(index));
  }
  CharProblem rest = p;
  rest.tangencies.erase(rest.tangencies.begin() + static_cast<long>(index));

  CharProblem with_point = rest;
  ++with_point.points;
  CharProblem with_first = rest;
  with_first.tangencies.push_back(first);
  CharProblem with_second = rest;
  with_second.tangencies.push_back(second);
  return {{2L * first * second, with_point.normalized()},
          {1, with_first.normalized()},
          {1, with_second.normalized()}};
}

SplitPolicy largest_first_policy() {
  return [](const CharProblem& p) {
    const auto it = std::max_element(p.tangencies.begin(), p.tangencies.end());
    const int degree = *it;
    return std::make_pair(static_cast<std::size_t>(it - p.tangencies.begin()),
                          std::make_pair(degree - 1, 1));
  };
}

std::vector<int> default_lines(int degree, int points) {
  std::vector<int> lines;
  for (int l = points + 1; l <= 3 * degree - 1; ++l) lines.push_back(l);
  return lines;
}

CharacteristicSolver::CharacteristicSolver(SplitPolicy policy)
    : policy_(std::move(policy)) {}

std::size_t CharacteristicSolver::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Rational CharacteristicSolver::evaluate(const CharProblem& raw) {
  const CharProblem p = raw.normalized();
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  }
  Rational value(0);
  const bool all_lines = std::all_of(p.tangencies.begin(), p.tangencies.end(),
                                     [](int t) { return t == 1; });
  if (all_lines) {
    const auto lines = default_lines(p.degree, p.points);
    value = count_fd(p.degree, LabelPartition::for_degree(p.degree, lines));
  } else {
    const auto [index, split] = policy_(p);
    for (const auto& term : expand_step(p, index, split.first, split.second)) {
      value += Rational(term.coefficient) * evaluate(term.problem);
    }
  }
  std::lock_guard lock(mutex_);
  memo_.emplace(p, value);
  return value;
}

BigInt CharacteristicSolver::solve(const CharProblem& p) {
  p.check();
  const Rational value = evaluate(p);
  if (!value.is_integer() || value.sign() < 0) {
    throw Error(Errc::IntegralityFailure,
                "characteristic number evaluated to " + value.to_string());
  }
  return value.numerator();
}

BigInt characteristic_number(const CharProblem& p) {
  static CharacteristicSolver solver;
  return solver.solve(p);
}

}  // namespace floorcount
