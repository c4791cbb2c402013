#include "floorcount/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "floorcount/error.hpp"
#include "tree_code.hpp"

namespace floorcount {

const char* violation_name(DiagramViolation v) {
  switch (v) {
    case DiagramViolation::NotTree: return "NotTree";
    case DiagramViolation::NotBipartite: return "NotBipartite";
    case DiagramViolation::WhiteDivNonPositive: return "WhiteDivNonPositive";
    case DiagramViolation::BlackDivPositive: return "BlackDivPositive";
    case DiagramViolation::ZeroFlowEdge: return "ZeroFlowEdge";
    case DiagramViolation::DegreeMismatch: return "DegreeMismatch";
  }
  return "Unknown";
}

const char* rule_name(MarkingRule r) {
  switch (r) {
    case MarkingRule::NotSurjective: return "NotSurjective";
    case MarkingRule::SizeMismatch: return "SizeMismatch";
    case MarkingRule::TwoPoints: return "TwoPoints";
    case MarkingRule::PointNotMin: return "PointNotMin";
    case MarkingRule::TwoLargeElements: return "TwoLargeElements";
    case MarkingRule::LargeElementIsPoint: return "LargeElementIsPoint";
  }
  return "Unknown";
}

namespace {

bool in_range(int v, std::size_t n) { return v >= 0 && v < static_cast<int>(n); }

// Connected and acyclic with |E| = |V| - 1, all endpoints in range.
bool is_tree(std::size_t n, std::span<const DiagramEdge> edges) {
  if (n == 0 || edges.size() + 1 != n) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (!in_range(e.white, n) || !in_range(e.black, n)) return false;
    const int a = find(e.white), b = find(e.black);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

detail::Adjacency adjacency_of(std::size_t n,
                               std::span<const DiagramEdge> edges) {
  detail::Adjacency adj(n);
  for (const auto& e : edges) {
    adj[e.white].push_back(e.black);
    adj[e.black].push_back(e.white);
  }
  return adj;
}

std::string vertex_payload(const Vertex& v) {
  std::string s(1, v.color == Color::White ? 'W' : 'B');
  s += std::to_string(v.div);
  return s;
}

}  // namespace

std::vector<EdgeFlow> induced_weights(std::span<const Vertex> vertices,
                                      std::span<const DiagramEdge> edges) {
  const std::size_t n = vertices.size();
  if (!is_tree(n, edges)) {
    throw Error(Errc::InvalidDiagram, "induced_weights needs a tree");
  }
  // Incidence lists so that each child knows the edge to its parent.
  std::vector<std::vector<Incidence>> inc(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    inc[edges[i].white].push_back({edges[i].black, i});
    inc[edges[i].black].push_back({edges[i].white, i});
  }
  std::vector<int> order{0}, parent_edge(n, -1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [u, e] : inc[order[i]]) {
      if (seen[u]) continue;
      seen[u] = true;
      parent_edge[u] = e;
      order.push_back(u);
    }
  }
  std::vector<long> subtree(n);
  for (std::size_t v = 0; v < n; ++v) subtree[v] = vertices[v].div;
  std::vector<EdgeFlow> flows(edges.size());
  int zero_edge = -1;  // lowest-index edge without flow
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const int e = parent_edge[v];
    if (e < 0) continue;
    const long sum = subtree[v];
    if (sum == 0 && (zero_edge < 0 || e < zero_edge)) zero_edge = e;
    const int parent = edges[e].white == v ? edges[e].black : edges[e].white;
    subtree[parent] += sum;
    // Flow runs toward the side whose net divergence is positive.
    const int head = sum > 0 ? v : parent;
    flows[e] = {static_cast<int>(sum > 0 ? sum : -sum), head == edges[e].white};
  }
  if (zero_edge >= 0) {
    throw Error(Errc::ZeroFlowEdge,
                "edge " + std::to_string(zero_edge) + " carries no flow", zero_edge);
  }
  return flows;
}

std::vector<DiagramViolation> validate_diagram(
    std::span<const Vertex> vertices, std::span<const DiagramEdge> edges,
    std::optional<int> degree) {
  std::vector<DiagramViolation> out;
  const std::size_t n = vertices.size();
  const bool tree = is_tree(n, edges);
  if (!tree) out.push_back(DiagramViolation::NotTree);
  for (const auto& e : edges) {
    if (!in_range(e.white, n) || !in_range(e.black, n)) continue;
    if (vertices[e.white].color != Color::White ||
        vertices[e.black].color != Color::Black) {
      out.push_back(DiagramViolation::NotBipartite);
      break;
    }
  }
  long white_sum = 0, total = 0;
  bool white_bad = false, black_bad = false;
  for (const auto& v : vertices) {
    total += v.div;
    if (v.color == Color::White) {
      white_sum += v.div;
      white_bad |= v.div < 1;
    } else {
      black_bad |= v.div > 0;
    }
  }
  if (white_bad) out.push_back(DiagramViolation::WhiteDivNonPositive);
  if (black_bad) out.push_back(DiagramViolation::BlackDivPositive);
  if (tree) {
    try {
      induced_weights(vertices, edges);
    } catch (const Error& e) {
      if (e.code() != Errc::ZeroFlowEdge) throw;
      out.push_back(DiagramViolation::ZeroFlowEdge);
    }
  }
  if (total != 0 || white_sum < 1 || (degree && white_sum != *degree)) {
    out.push_back(DiagramViolation::DegreeMismatch);
  }
  return out;
}

FloorDiagram::FloorDiagram(std::vector<Vertex> vertices,
                           std::vector<DiagramEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  auto violations = validate_diagram(vertices_, edges_);
  std::erase(violations, DiagramViolation::ZeroFlowEdge);
  if (!violations.empty()) {
    std::string msg;
    for (auto v : violations) {
      if (!msg.empty()) msg += ", ";
      msg += violation_name(v);
    }
    throw Error(Errc::InvalidDiagram, msg);
  }
  flows_ = induced_weights(vertices_, edges_);
  adjacency_.resize(vertices_.size());
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adjacency_[edges_[i].white].push_back({edges_[i].black, i});
    adjacency_[edges_[i].black].push_back({edges_[i].white, i});
  }
  for (const auto& v : vertices_) {
    if (v.color == Color::White) degree_ += v.div;
  }
}

int FloorDiagram::preimage_size(int v) const {
  const Vertex& x = vertices_[v];
  return x.color == Color::White ? 2 * x.div - 1 : valence(v) - x.div - 1;
}

long FloorDiagram::edge_weight_product() const {
  long p = 1;
  for (const auto& f : flows_) p *= f.weight;
  return p;
}

int diagram_degree(const FloorDiagram& d) { return d.degree(); }

LabelPartition::LabelPartition(int label_count, std::span<const int> lines)
    : label_count_(label_count), is_line_(label_count + 1, false) {
  if (label_count < 0) throw Error(Errc::InvalidLabels, "negative label count");
  for (int l : lines) {
    if (l < 1 || l > label_count) {
      throw Error(Errc::InvalidLabels,
                  "label " + std::to_string(l) + " outside 1.." +
                      std::to_string(label_count),
                  l);
    }
    if (is_line_[l]) {
      throw Error(Errc::InvalidLabels, "repeated label " + std::to_string(l), l);
    }
    is_line_[l] = true;
  }
  lines_.assign(lines.begin(), lines.end());
  std::sort(lines_.begin(), lines_.end());
}

std::vector<int> Marking::preimage(int v) const {
  std::vector<int> out;
  for (int l = 1; l <= static_cast<int>(assignment.size()); ++l) {
    if (assignment[l - 1] == v) out.push_back(l);
  }
  return out;
}

std::vector<MarkingViolation> validate_marking(const FloorDiagram& d,
                                               const Marking& m,
                                               const LabelPartition& labels) {
  const int n = d.vertex_count();
  if (static_cast<int>(m.assignment.size()) != d.label_count() ||
      labels.label_count() != d.label_count()) {
    throw Error(Errc::InvalidLabels, "marking must assign labels 1..3d-1");
  }
  std::vector<std::vector<int>> pre(n);
  for (int l = 1; l <= d.label_count(); ++l) {
    const int v = m.vertex_of(l);
    if (v < 0 || v >= n) {
      throw Error(Errc::InvalidLabels, "label assigned to missing vertex", l);
    }
    pre[v].push_back(l);
  }
  std::vector<MarkingViolation> out;
  if (std::any_of(pre.begin(), pre.end(),
                  [](const auto& p) { return p.empty(); })) {
    out.push_back({MarkingRule::NotSurjective, -1});
  }
  for (int v = 0; v < n; ++v) {
    const auto& p = pre[v];
    if (static_cast<int>(p.size()) != d.preimage_size(v)) {
      out.push_back({MarkingRule::SizeMismatch, v});
    }
    const auto points = std::count_if(
        p.begin(), p.end(), [&](int l) { return labels.is_point(l); });
    if (points > 1) out.push_back({MarkingRule::TwoPoints, v});
    if (d.vertex(v).color == Color::White) {
      if (points >= 1 && labels.is_line(p.front())) {
        out.push_back({MarkingRule::PointNotMin, v});
      }
      continue;
    }
    int largest_min = 0;
    bool complete = true;
    for (const auto& inc : d.incident(v)) {
      if (pre[inc.neighbor].empty()) {
        complete = false;
        break;
      }
      largest_min = std::max(largest_min, pre[inc.neighbor].front());
    }
    if (!complete) continue;
    const auto large = std::count_if(
        p.begin(), p.end(), [&](int l) { return l > largest_min; });
    if (large > 1) out.push_back({MarkingRule::TwoLargeElements, v});
    if (large >= 1 && points >= 1) {
      out.push_back({MarkingRule::LargeElementIsPoint, v});
    }
  }
  return out;
}

std::string canonical_key(const FloorDiagram& d, const Marking* marking) {
  const int n = d.vertex_count();
  std::vector<std::string> payload(n);
  for (int v = 0; v < n; ++v) payload[v] = vertex_payload(d.vertex(v));
  if (marking != nullptr) {
    for (int l = 1; l <= static_cast<int>(marking->assignment.size()); ++l) {
      std::string& p = payload[marking->vertex_of(l)];
      p += p.find(':') == std::string::npos ? ':' : ',';
      p += std::to_string(l);
    }
  }
  return detail::free_tree_code(adjacency_of(n, d.edges()), payload);
}

namespace {

// Extends a partial isomorphism along BFS order of the source rooting. Codes
// of equal subtrees guarantee that every branch completes.
void extend_isomorphisms(const detail::Adjacency& adj,
                         const std::vector<int>& order,
                         const std::vector<int>& parent,
                         const std::vector<std::string>& source_codes,
                         const std::vector<std::string>& target_codes,
                         std::size_t pos, Permutation& perm,
                         std::vector<bool>& used,
                         std::vector<Permutation>& out) {
  if (pos == order.size()) {
    out.push_back(perm);
    return;
  }
  const int x = order[pos];
  const int image_parent = perm[parent[x]];
  for (int y : adj[image_parent]) {
    if (used[y] || target_codes[y] != source_codes[x]) continue;
    used[y] = true;
    perm[x] = y;
    extend_isomorphisms(adj, order, parent, source_codes, target_codes,
                        pos + 1, perm, used, out);
    used[y] = false;
    perm[x] = -1;
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const FloorDiagram& d) {
  const int n = d.vertex_count();
  const auto adj = adjacency_of(n, d.edges());
  std::vector<std::string> payload(n);
  for (int v = 0; v < n; ++v) payload[v] = vertex_payload(d.vertex(v));

  const auto centroids = detail::tree_centroids(adj);
  const int root = centroids.front();
  std::vector<std::string> source_codes(n);
  detail::rooted_code(adj, payload, root, -1, source_codes);

  std::vector<int> order{root}, parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int u : adj[order[i]]) {
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = order[i];
        order.push_back(u);
      }
    }
  }

  std::vector<Permutation> out;
  for (int target_root : centroids) {
    std::vector<std::string> target_codes(n);
    if (target_root == root) {
      target_codes = source_codes;
    } else {
      detail::rooted_code(adj, payload, target_root, -1, target_codes);
    }
    if (target_codes[target_root] != source_codes[root]) continue;
    Permutation perm(n, -1);
    std::vector<bool> used(n, false);
    perm[root] = target_root;
    used[target_root] = true;
    extend_isomorphisms(adj, order, parent, source_codes, target_codes, 1,
                        perm, used, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Marking apply(const Permutation& perm, const Marking& m) {
  Marking r;
  r.assignment.reserve(m.assignment.size());
  for (int v : m.assignment) r.assignment.push_back(perm[v]);
  return r;
}

FloorDiagram relabel(const FloorDiagram& d, const Permutation& perm) {
  std::vector<Vertex> vertices(d.vertices().size());
  for (int v = 0; v < d.vertex_count(); ++v) vertices[perm[v]] = d.vertex(v);
  std::vector<DiagramEdge> edges;
  edges.reserve(d.edges().size());
  for (const auto& e : d.edges()) edges.push_back({perm[e.white], perm[e.black]});
  return FloorDiagram(std::move(vertices), std::move(edges));
}

}  // namespace floorcount
