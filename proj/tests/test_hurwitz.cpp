#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "floorcount/error.hpp"
#include "floorcount/hurwitz.hpp"
#include "floorcount/oracles.hpp"

using namespace floorcount;

TEST_SUITE("hurwitz") {

TEST_CASE("closed formula") {
  CHECK(closed_hurwitz(1) == Rational(1));
  CHECK(closed_hurwitz(2) == Rational(1, 2));
  CHECK(closed_hurwitz(3) == Rational(4));
  CHECK(closed_hurwitz(4) == Rational(120));
  CHECK(closed_hurwitz(5) == Rational(8400));
  CHECK_THROWS_AS(closed_hurwitz(0), Error);
}

TEST_CASE("open Hurwitz worked values") {
  CHECK(open_hurwitz({{2, 0}, {1, 0}}) == Rational(1, 2));
  CHECK(open_hurwitz({{1, 2, 0}, {0, 1, 0}}) == Rational(1));
  CHECK(open_hurwitz({{3, 0}, {2, 0}}) == Rational(1));
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(open_hurwitz({{0, d, 0}, {0, 0, 0}}) == Rational(1, d));
  }
  CHECK(open_hurwitz({{1, 0}, {0, 0}}) == Rational(1));
  CHECK(open_hurwitz({{0, 1, 0}, {0, 0, 0}}) == Rational(1));
}

TEST_CASE("s = 0 agrees with the closed formula") {
  for (int d = 1; d <= 5; ++d) {
    CAPTURE(d);
    CHECK(open_hurwitz(HurwitzProblem::closed(d)) == closed_hurwitz(d));
  }
}

TEST_CASE("cover for delta=(2,0), n=(1,0)") {
  const auto covers = enumerate_tropical_covers({{2, 0}, {1, 0}});
  REQUIRE(covers.size() == 1);
  const TropicalCover& c = covers[0];
  CHECK(c.aut_order == 2);
  CHECK(c.mu == Rational(1));
  REQUIRE(c.events.size() == 2);
  CHECK(c.events[0].kind == CoverEventKind::Merge);
  CHECK(c.events[0].weights == std::vector<int>{1, 1, 2});
  CHECK(c.events[1].kind == CoverEventKind::BoundaryClose);
  CHECK(c.events[1].weights == std::vector<int>{2});
}

TEST_CASE("cover for delta=(3,0), n=(2,0)") {
  const auto covers = enumerate_tropical_covers({{3, 0}, {2, 0}});
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].aut_order == 2);
  CHECK(covers[0].mu == Rational(2));
  REQUIRE(covers[0].events.size() == 3);
  CHECK(covers[0].events[0].weights == std::vector<int>{1, 1, 2});
  CHECK(covers[0].events[1].weights == std::vector<int>{1, 2, 3});
  CHECK(covers[0].events[2].kind == CoverEventKind::BoundaryClose);
}

TEST_CASE("closed degree-2 cover") {
  const auto covers = enumerate_tropical_covers(HurwitzProblem::closed(2));
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].aut_order == 4);
  CHECK(covers[0].mu == Rational(2));
  CHECK(covers[0].events[0].kind == CoverEventKind::Merge);
  CHECK(covers[0].events[1].kind == CoverEventKind::Split);
  for (const auto& e : covers[0].edges) {
    if (e.is_end()) CHECK(e.weight == 1);
  }
}

TEST_CASE("infeasible problems") {
  CHECK(open_hurwitz({{-1, 1, 0}, {0, 1, 0}}) == Rational(0));
  CHECK(open_hurwitz({{2, 0}, {-1, 2}}) == Rational(0));
  CHECK(open_hurwitz({{2, 0}, {2, 0}}) == Rational(0));
  CHECK(open_hurwitz({{1, 1, 0}, {0, 0, 0}}) == Rational(0));
  CHECK_FALSE(HurwitzProblem{{1, 1, 0}, {0, 0, 0}}.feasible());
  try {
    enumerate_tropical_covers({{2, 0}, {2, 0}});
    FAIL("expected InfeasibleProblem");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfeasibleProblem);
  }
}

TEST_CASE("mirror symmetry") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(0, 4);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int s = trial % 4;
    HurwitzProblem p;
    for (int i = 0; i <= s; ++i) p.delta.push_back(small(rng));
    p.branch.assign(s + 1, 0);
    const int total = p.delta.front() + p.delta.back() + s - 2;
    if (total < 0) continue;
    for (int b = 0; b < total; ++b) ++p.branch[rng() % (s + 1)];
    const HurwitzProblem q{{p.delta.rbegin(), p.delta.rend()}, {p.branch.rbegin(), p.branch.rend()}};
    CHECK(open_hurwitz(p) == open_hurwitz(q));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("cover set does not depend on move order") {
  const std::vector<HurwitzProblem> problems{
      {{3, 1, 0}, {1, 1, 1}}, {{2, 4, 1}, {1, 1, 1}}, HurwitzProblem::closed(4), {{0, 3, 2, 0}, {0, 0, 1, 0}}};
  for (const auto& p : problems) {
    const auto base = enumerate_tropical_covers(p);
    std::vector<std::string> keys;
    for (const auto& c : base) keys.push_back(c.key());
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      const auto shuffled = enumerate_tropical_covers(p, CoverSearchOptions{seed});
      std::vector<std::string> other;
      for (const auto& c : shuffled) other.push_back(c.key());
      CHECK(other == keys);
      CHECK(open_hurwitz_uncached(p, CoverSearchOptions{seed}) == open_hurwitz_uncached(p));
    }
  }
}

TEST_CASE("cache returns uncached values") {
  const HurwitzProblem p{{2, 3, 0}, {1, 0, 1}};
  CHECK(open_hurwitz(p) == open_hurwitz_uncached(p));
  const auto before = hurwitz_cache_size();
  open_hurwitz(p);
  CHECK(hurwitz_cache_size() == before);
}

TEST_CASE("monodromy oracle agrees with the closed formula") {
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    CHECK(monodromy_hurwitz(d) == closed_hurwitz(d));
    CHECK(monodromy_hurwitz_serial(d) == closed_hurwitz(d));
  }
}

}  // TEST_SUITE
