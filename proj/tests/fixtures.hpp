#pragma once
// Hand-built diagrams shared by the unit tests.
#include <vector>

#include "floorcount/diagram.hpp"

namespace fixtures {

using floorcount::Color;
using floorcount::DiagramEdge;
using floorcount::FloorDiagram;
using floorcount::Vertex;

// W(1) -- B(-1)
inline FloorDiagram line() {
  return FloorDiagram({{Color::White, 1}, {Color::Black, -1}}, {{0, 1}});
}

// B(-2) with two leaves W(1), W(1)
inline FloorDiagram star() {
  return FloorDiagram({{Color::Black, -2}, {Color::White, 1}, {Color::White, 1}},
                      {{1, 0}, {2, 0}});
}

// B0(-2) -- W1(1) -- B1(0) -- W2(1)
inline FloorDiagram chain() {
  return FloorDiagram(
      {{Color::Black, -2}, {Color::White, 1}, {Color::Black, 0}, {Color::White, 1}},
      {{1, 0}, {1, 2}, {3, 2}});
}

// B(-1), B'(-1) leaves on W1(1); W1 -- B''(0) -- W2(1).
// Vertex order: B=0, B'=1, W1=2, B''=3, W2=4.
inline FloorDiagram five_vertex() {
  return FloorDiagram({{Color::Black, -1},
                       {Color::Black, -1},
                       {Color::White, 1},
                       {Color::Black, 0},
                       {Color::White, 1}},
                      {{2, 0}, {2, 1}, {2, 3}, {4, 3}});
}

// Labels 1,2 on the black leaves, W1 <- 3, B'' <- 4, W2 <- 5.
inline floorcount::Marking five_vertex_marking() { return {{0, 1, 2, 3, 4}}; }

}  // namespace fixtures
