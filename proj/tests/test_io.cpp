#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "floorcount/error.hpp"
#include "floorcount/floor_diagrams.hpp"
#include "floorcount/io.hpp"

using namespace floorcount;

namespace {

Errc parse_error_of(std::string_view text, bool multiset) {
  try {
    multiset ? io::parse_multiset(text) : io::parse_int_list(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted '" << std::string(text) << "'");
  return Errc::InvalidDegree;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("integer lists") {
  CHECK(io::parse_int_list("4,5") == std::vector<int>{4, 5});
  CHECK(io::parse_int_list("").empty());
  CHECK(io::parse_int_list("-1, 2") == std::vector<int>{-1, 2});
  CHECK(parse_error_of("4,x", false) == Errc::ParseError);
  CHECK(parse_error_of("4,,5", false) == Errc::ParseError);
}

TEST_CASE("power syntax") {
  CHECK(io::parse_multiset("2^5") == std::vector<int>(5, 2));
  std::vector<int> mixed(7, 1);
  mixed.push_back(2);
  CHECK(io::parse_multiset("1^7,2") == mixed);
  CHECK(io::parse_multiset("3,2^0") == std::vector<int>{3});
  CHECK(parse_error_of("2^", true) == Errc::ParseError);
  CHECK(parse_error_of("^3", true) == Errc::ParseError);
}

TEST_CASE("diagram JSON round trip") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& diagram : enumerate_diagrams(d)) {
      const auto text = io::diagram_to_json(diagram).dump();
      const FloorDiagram back = io::diagram_from_json(nlohmann::json::parse(text));
      CHECK(back == diagram);
      CHECK(back.flows() == diagram.flows());
    }
  }
}

TEST_CASE("stored weights must match the derived flow") {
  auto j = io::diagram_to_json(fixtures::chain());
  j["edges"][0]["weight"] = 1;
  CHECK_THROWS_AS(io::diagram_from_json(j), Error);
  auto k = io::diagram_to_json(fixtures::chain());
  k["edges"][1]["orientation"] = "toward_white";
  CHECK_THROWS_AS(io::diagram_from_json(k), Error);
  CHECK_THROWS_AS(io::diagram_from_json(nlohmann::json::object()), Error);
}

TEST_CASE("diagrams document") {
  const auto labels = LabelPartition::for_degree(2, std::vector<int>{4, 5});
  const auto terms = marked_diagrams(2, labels);
  const auto doc = io::diagrams_document({{"command", "diagrams"}}, 2, labels, terms);
  CHECK(doc["schema"] == "1");
  CHECK(doc["degree"] == 2);
  CHECK(doc["lcomb"] == nlohmann::json::array({4, 5}));
  CHECK(doc["total"] == "4");
  CHECK(doc["diagrams"].size() == 5);
  for (const auto& d : doc["diagrams"]) {
    for (const auto& m : d["markings"]) {
      CHECK(m["assignment"].size() == 5);
      CHECK_NOTHROW(Rational::parse(m["multiplicity"].get<std::string>()));
    }
  }
  CHECK(nlohmann::json::parse(doc.dump()) == doc);

  const std::string text = io::diagrams_text(2, labels, terms);
  CHECK(text.substr(text.rfind("total")) == "total 4\n");
}

TEST_CASE("cover JSON") {
  const auto covers = enumerate_tropical_covers({{2, 0}, {1, 0}});
  const auto j = io::cover_to_json(covers.at(0));
  CHECK(j["mu"] == "1");
  CHECK(j["aut_order"] == 2);
  CHECK(j["events"].size() == 2);
}

TEST_CASE("DOT rendering") {
  const FloorDiagram chain = fixtures::chain();
  const std::string dot = io::to_dot(chain);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("style=filled") != std::string::npos);
  CHECK(dot.find("v0 -> v1 [label=\"2\"]") != std::string::npos);
  CHECK(dot.find("v1 -> v2;") != std::string::npos);
}

}  // TEST_SUITE
