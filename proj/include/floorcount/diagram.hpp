#pragma once

// Floor diagrams of genus 0 and their constraint markings.
//
// A diagram is stored as (bipartite tree, colors, divergences). Edge weights
// and orientations are not independent data: on a tree they are the unique
// flow whose net divergence at each vertex matches `div`, see induced_weights.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "floorcount/rational.hpp"

namespace floorcount {

enum class Color : std::uint8_t { White, Black };

struct Vertex {
  Color color;
  int div;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Edge between a white and a black vertex, by vertex index.
struct DiagramEdge {
  int white;
  int black;

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct EdgeFlow {
  int weight;
  bool toward_white;

  friend bool operator==(const EdgeFlow&, const EdgeFlow&) = default;
};

struct Incidence {
  int neighbor;
  int edge;
};

enum class DiagramViolation {
  NotTree,
  NotBipartite,
  WhiteDivNonPositive,
  BlackDivPositive,
  ZeroFlowEdge,
  DegreeMismatch,
};

const char* violation_name(DiagramViolation v);

/// Unique tree flow reproducing `vertices[i].div` as (incoming - outgoing).
/// Requires a tree on `vertices`; throws Error(ZeroFlowEdge, edge index) when
/// some edge cut has net divergence 0.
std::vector<EdgeFlow> induced_weights(std::span<const Vertex> vertices,
                                      std::span<const DiagramEdge> edges);

/// Every broken FloorDiagram invariant; empty when the candidate is valid.
/// `degree`, when given, is checked against the white divergence sum.
std::vector<DiagramViolation> validate_diagram(
    std::span<const Vertex> vertices, std::span<const DiagramEdge> edges,
    std::optional<int> degree = std::nullopt);

class FloorDiagram {
 public:
  /// Throws Error(InvalidDiagram) listing violations, or Error(ZeroFlowEdge).
  FloorDiagram(std::vector<Vertex> vertices, std::vector<DiagramEdge> edges);

  int degree() const { return degree_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int label_count() const { return 3 * degree_ - 1; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const std::vector<EdgeFlow>& flows() const { return flows_; }
  std::span<const Incidence> incident(int v) const { return adjacency_[v]; }
  int valence(int v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Number of labels a marking puts on `v`: 2div-1 (white), val-div-1 (black).
  int preimage_size(int v) const;

  /// Product of all edge weights.
  long edge_weight_product() const;

  friend bool operator==(const FloorDiagram& a, const FloorDiagram& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<DiagramEdge> edges_;
  std::vector<EdgeFlow> flows_;
  std::vector<std::vector<Incidence>> adjacency_;
  int degree_ = 0;
};

/// Sum of white divergences.
int diagram_degree(const FloorDiagram& d);

/// Partition of the labels {1..3d-1} into tangency lines (L) and points (P).
class LabelPartition {
 public:
  /// Throws Error(InvalidLabels) if a label is outside 1..label_count or
  /// repeated.
  LabelPartition(int label_count, std::span<const int> lines);

  static LabelPartition for_degree(int degree, std::span<const int> lines) {
    return LabelPartition(3 * degree - 1, lines);
  }

  int label_count() const { return label_count_; }
  bool is_line(int label) const { return is_line_[label]; }
  bool is_point(int label) const { return !is_line_[label]; }
  const std::vector<int>& lines() const { return lines_; }

 private:
  int label_count_;
  std::vector<bool> is_line_;  // indexed by label, slot 0 unused
  std::vector<int> lines_;
};

/// Total assignment label -> vertex; `assignment[l - 1]` is the vertex of l.
struct Marking {
  std::vector<int> assignment;

  int vertex_of(int label) const { return assignment[label - 1]; }
  /// Sorted labels placed on `v`.
  std::vector<int> preimage(int v) const;

  friend bool operator==(const Marking&, const Marking&) = default;
  friend auto operator<=>(const Marking&, const Marking&) = default;
};

enum class MarkingRule {
  NotSurjective,
  SizeMismatch,
  TwoPoints,
  PointNotMin,
  TwoLargeElements,
  LargeElementIsPoint,
};

const char* rule_name(MarkingRule r);

struct MarkingViolation {
  MarkingRule rule;
  int vertex;  // -1 for NotSurjective

  friend bool operator==(const MarkingViolation&,
                         const MarkingViolation&) = default;
};

/// All violated marking rules; empty means the marking is valid.
std::vector<MarkingViolation> validate_marking(const FloorDiagram& d,
                                               const Marking& m,
                                               const LabelPartition& labels);

inline bool is_valid_marking(const FloorDiagram& d, const Marking& m,
                             const LabelPartition& labels) {
  return validate_marking(d, m, labels).empty();
}

/// Canonical encoding of the (optionally marked) diagram: equal strings iff
/// isomorphic as colored, divergence-labeled (and label-carrying) trees.
std::string canonical_key(const FloorDiagram& d,
                          const Marking* marking = nullptr);

/// A vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<int>;

/// The full automorphism group of the diagram, identity first.
std::vector<Permutation> automorphisms(const FloorDiagram& d);

/// Marking transported by an automorphism: label l goes to perm[m(l)].
Marking apply(const Permutation& perm, const Marking& m);

/// Diagram with vertex i renamed to perm[i].
FloorDiagram relabel(const FloorDiagram& d, const Permutation& perm);

struct MarkedDiagram {
  FloorDiagram diagram;
  Marking marking;
  Rational multiplicity;
};

}  // namespace floorcount
