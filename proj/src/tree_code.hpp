#pragma once

// AHU-style canonical codes for small vertex-labeled trees.

#include <algorithm>
#include <string>
#include <vector>

namespace floorcount::detail {

using Adjacency = std::vector<std::vector<int>>;

inline std::vector<int> tree_centroids(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return {0};
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int u : adj[order[i]]) {
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = order[i];
        order.push_back(u);
      }
    }
  }
  std::vector<int> size(n, 1);
  std::vector<int> heaviest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (parent[v] >= 0) {
      size[parent[v]] += size[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
  }
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    if (std::max(heaviest[v], n - size[v]) * 2 <= n) result.push_back(v);
  }
  return result;
}

/// Code of the subtree at `v` hanging away from `parent`; fills `codes` for
/// every vertex of that subtree.
inline const std::string& rooted_code(const Adjacency& adj,
                                      const std::vector<std::string>& payload,
                                      int v, int parent,
                                      std::vector<std::string>& codes) {
  std::vector<std::string> children;
  for (int u : adj[v]) {
    if (u == parent) continue;
    children.push_back(rooted_code(adj, payload, u, v, codes));
  }
  std::sort(children.begin(), children.end());
  std::string& out = codes[v];
  out.clear();
  out += '(';
  out += payload[v];
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

/// Minimum rooted code over the centroids: a complete isomorphism invariant.
inline std::string free_tree_code(const Adjacency& adj,
                                  const std::vector<std::string>& payload) {
  std::vector<std::string> codes(adj.size());
  std::string best;
  bool first = true;
  for (int c : tree_centroids(adj)) {
    std::string code = rooted_code(adj, payload, c, -1, codes);
    if (first || code < best) {
      best = std::move(code);
      first = false;
    }
  }
  return best;
}

}  // namespace floorcount::detail
