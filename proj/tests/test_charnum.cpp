#include <algorithm>
#include <vector>

#include "doctest.h"
#include "floorcount/charnum.hpp"
#include "floorcount/error.hpp"

using namespace floorcount;

namespace {

Errc code_of(const CharProblem& p) {
  try {
    characteristic_number(p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::ParseError;
}

Rational evaluate(const std::vector<ExpansionTerm>& terms) {
  Rational sum(0);
  for (const auto& t : terms) sum += Rational(t.coefficient) * Rational(characteristic_number(t.problem));
  return sum;
}

}  // namespace

TEST_SUITE("charnum") {

TEST_CASE("worked values") {
  CHECK(characteristic_number({2, 3, {1, 1}}) == 4);
  CHECK(characteristic_number({2, 4, {2}}) == 6);
  CHECK(characteristic_number({2, 0, {2, 2, 2, 2, 2}}) == 3264);
  CHECK(characteristic_number({1, 2, {}}) == 1);
}

TEST_CASE("conic-conic tangency ladder") {
  const std::vector<long> expected{3264, 816, 184, 36, 6};
  for (int k = 0; k <= 4; ++k) {
    CHECK(characteristic_number({2, k, std::vector<int>(5 - k, 2)}) == expected[k]);
  }
}

TEST_CASE("cubic table through the all-lines base case") {
  const std::vector<long> expected{400, 600, 756, 712, 480, 240, 100, 36, 12};
  for (int k = 0; k <= 8; ++k) {
    CHECK(characteristic_number({3, k, std::vector<int>(8 - k, 1)}) == expected[k]);
  }
}

TEST_CASE("expand_step") {
  const auto terms = expand_step({2, 4, {2}}, 0, 1, 1);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].coefficient == 2);
  CHECK(terms[0].problem == CharProblem{2, 5, {}});
  CHECK(terms[1].coefficient == 1);
  CHECK(terms[1].problem == CharProblem{2, 4, {1}});
  CHECK(terms[2].problem == CharProblem{2, 4, {1}});
  CHECK(evaluate(terms) == Rational(6));

  const auto mixed = expand_step({2, 3, {2, 1}}, 0, 1, 1);
  CHECK(evaluate(mixed) == Rational(12));
  CHECK(characteristic_number({2, 3, {2, 1}}) == 12);
}

TEST_CASE("split order does not matter") {
  auto key = [](std::vector<ExpansionTerm> t) {
    std::vector<std::pair<long, CharProblem>> out;
    for (auto& x : t) out.emplace_back(x.coefficient, x.problem.normalized());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(key(expand_step({3, 2, {3, 1, 1, 1, 1, 1, 1}}, 0, 2, 1)) ==
        key(expand_step({3, 2, {3, 1, 1, 1, 1, 1, 1}}, 0, 1, 2)));
}

TEST_CASE("another split policy gives the same values") {
  // Smallest splittable degree first, split as (1, D - 1).
  CharacteristicSolver other([](const CharProblem& p) {
    std::size_t best = p.tangencies.size();
    for (std::size_t i = 0; i < p.tangencies.size(); ++i) {
      if (p.tangencies[i] > 1 && (best == p.tangencies.size() || p.tangencies[i] < p.tangencies[best])) best = i;
    }
    const int D = p.tangencies[best];
    return std::make_pair(best, std::make_pair(1, D - 1));
  });
  CHECK(other.solve({2, 0, {2, 2, 2, 2, 2}}) == 3264);
  CHECK(other.solve({2, 2, {3, 2, 1}}) == characteristic_number({2, 2, {3, 2, 1}}));
  CHECK(other.memo_size() > 0);
}

TEST_CASE("errors") {
  CHECK(code_of({2, 3, {1}}) == Errc::ConstraintCountMismatch);
  CHECK(code_of({0, 0, {}}) == Errc::InvalidDegree);
  CHECK(code_of({2, 5, {}, 1}) == Errc::UnsupportedGenus);
  try {
    expand_step({2, 4, {1}}, 0, 1, 0);
    FAIL("expected NoSplittableConstraint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSplittableConstraint);
  }
  CHECK_THROWS_AS(expand_step({2, 4, {2}}, 0, 1, 2), Error);
}

TEST_CASE("default lines") {
  CHECK(default_lines(2, 3) == std::vector<int>{4, 5});
  CHECK(default_lines(1, 2).empty());
  CHECK(default_lines(3, 0).size() == 8);
}

}  // TEST_SUITE
