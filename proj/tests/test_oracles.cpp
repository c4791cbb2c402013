#include "doctest.h"
#include "floorcount/charnum.hpp"
#include "floorcount/error.hpp"
#include "floorcount/floor_diagrams.hpp"
#include "floorcount/oracles.hpp"

using namespace floorcount;

TEST_SUITE("oracles") {

TEST_CASE("monodromy counts") {
  CHECK(monodromy_hurwitz(1) == Rational(1));
  CHECK(monodromy_hurwitz(2) == Rational(1, 2));
  CHECK(monodromy_hurwitz(3) == Rational(4));
  CHECK(monodromy_hurwitz(4) == Rational(120));
  CHECK(monodromy_hurwitz_serial(3) == Rational(4));
  CHECK_THROWS_AS(monodromy_hurwitz(6), Error);
}

TEST_CASE("kontsevich recursion") {
  CHECK(kontsevich_gw(1) == 1);
  CHECK(kontsevich_gw(2) == 1);
  CHECK(kontsevich_gw(3) == 12);
  CHECK(kontsevich_gw(4) == 620);
  CHECK(kontsevich_gw(5) == 87304);
}

TEST_CASE("point-only floor diagram sums match kontsevich") {
  for (int d = 1; d <= 3; ++d) {
    CHECK(count_fd(d, LabelPartition::for_degree(d, std::vector<int>{})) == Rational(kontsevich_gw(d)));
  }
}

TEST_CASE("invariance audit") {
  const AuditReport conic = invariance_audit(2, 2);
  CHECK(conic.exhaustive);
  CHECK(conic.pass);
  CHECK(conic.subsets_checked == 10);
  CHECK(conic.value == Rational(4));

  const AuditReport cubic = invariance_audit(3, 7);
  CHECK(cubic.exhaustive);
  CHECK(cubic.pass);
  CHECK(cubic.subsets_checked == 8);
  CHECK(cubic.value == Rational(600));

  const AuditReport line = invariance_audit(1, 0);
  CHECK(line.pass);
  CHECK(line.value == Rational(1));
}

TEST_CASE("sampled audit above the exhaustive limit") {
  // C(11, 5) = 462 > 200 subsets: sampled.
  const AuditReport r = invariance_audit(4, 5, 1, 3);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.subsets_checked == 1);
  CHECK(r.pass);
}

}  // TEST_SUITE
