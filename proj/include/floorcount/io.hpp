#pragma once

// Text, JSON (schema "1") and Graphviz renderings used by the CLI.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "floorcount/diagram.hpp"
#include "floorcount/floor_diagrams.hpp"
#include "floorcount/hurwitz.hpp"

namespace floorcount::io {

inline constexpr const char* kSchemaVersion = "1";

/// "4,5" -> {4, 5}; "" -> {}. Throws Error(ParseError).
std::vector<int> parse_int_list(std::string_view text);

/// Constraint multiset with power syntax: "2^5" -> {2,2,2,2,2},
/// "1^7,2" -> {1 x7, 2}. Throws Error(ParseError).
std::vector<int> parse_multiset(std::string_view text);

nlohmann::json diagram_to_json(const FloorDiagram& d);
/// Rebuilds a diagram from diagram_to_json output; weights are re-derived and
/// must agree with the stored ones. Throws Error(ParseError / InvalidDiagram).
FloorDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json cover_to_json(const TropicalCover& c);

/// The `diagrams` document: every diagram, its marking classes with
/// multiplicities, and the total.
nlohmann::json diagrams_document(const nlohmann::json& request, int degree,
                                 const LabelPartition& labels,
                                 const std::vector<DiagramTerms>& terms);

std::string diagrams_text(int degree, const LabelPartition& labels,
                          const std::vector<DiagramTerms>& terms);

/// White vertices as open circles, black as filled dots, edges directed by
/// orientation and labeled by weight when it is not 1.
std::string to_dot(const FloorDiagram& d, const Marking* marking = nullptr,
                   const std::string& name = "floor_diagram");

std::string diagrams_dot(const std::vector<DiagramTerms>& terms);

Rational total_of(const std::vector<DiagramTerms>& terms);

}  // namespace floorcount::io
