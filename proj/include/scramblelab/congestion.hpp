#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "scramblelab/budgets.hpp"
#include "scramblelab/multigraph.hpp"
#include "scramblelab/treecut.hpp"

namespace scramblelab {

// A subcubic tree whose leaves host the graph vertices (injectively).
struct LeafEmbedding {
  int nodes = 1;
  std::vector<std::pair<int, int>> links;
  std::vector<int> leaf_of;  // vertex -> hosting tree node
};

struct CongestionReport {
  long long congestion = 0;
  std::vector<long long> node_loads;  // paths through each tree node
};

namespace detail {
inline std::vector<std::vector<int>> embedding_adjacency(const MultiGraph& g,
                                                         const LeafEmbedding& emb) {
  require(emb.nodes >= 1, errc::invalid_embedding, "embedding needs a tree node");
  require(static_cast<int>(emb.links.size()) == emb.nodes - 1, errc::invalid_embedding,
          "a tree on k nodes has k-1 links");
  std::vector<std::vector<int>> adj(emb.nodes);
  for (const auto& [a, b] : emb.links) {
    require(a >= 0 && a < emb.nodes && b >= 0 && b < emb.nodes, errc::invalid_embedding,
            "link endpoint out of range");
    require(a != b, errc::invalid_embedding, "link endpoints must differ");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(emb.nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  require(reached == emb.nodes, errc::invalid_embedding, "links do not form a tree");
  for (int b = 0; b < emb.nodes; ++b)
    require(adj[b].size() <= 3, errc::invalid_embedding, "tree must be subcubic");
  require(static_cast<int>(emb.leaf_of.size()) == g.n(), errc::invalid_embedding,
          "need a tree node per vertex");
  std::vector<char> taken(emb.nodes, 0);
  for (int v = 0; v < g.n(); ++v) {
    int b = emb.leaf_of[v];
    require(b >= 0 && b < emb.nodes, errc::invalid_embedding, "vertex mapped off the tree");
    require(adj[b].size() <= 1, errc::invalid_embedding, "vertices must sit at leaves");
    require(!taken[b], errc::invalid_embedding, "two vertices share a leaf");
    taken[b] = 1;
  }
  return adj;
}

inline std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -2);
  parent[from] = -1;
  std::vector<int> queue{from};
  for (size_t i = 0; i < queue.size() && parent[to] == -2; ++i)
    for (int y : adj[queue[i]])
      if (parent[y] == -2) {
        parent[y] = queue[i];
        queue.push_back(y);
      }
  std::vector<int> path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  return path;
}
}  // namespace detail

inline void check_embedding(const MultiGraph& g, const LeafEmbedding& emb) {
  (void)detail::embedding_adjacency(g, emb);
}

// Congestion of an embedding: route every edge copy along the unique tree
// path between its endpoints' leaves; a node's load counts the paths through
// it (endpoints included); congestion is the max load.
inline CongestionReport embedding_congestion(const MultiGraph& g, const LeafEmbedding& emb) {
  std::vector<std::vector<int>> adj = detail::embedding_adjacency(g, emb);
  CongestionReport rep;
  rep.node_loads.assign(emb.nodes, 0);
  for (const Edge& e : g.edges())
    for (int x : detail::tree_path(adj, emb.leaf_of[e.u], emb.leaf_of[e.v]))
      rep.node_loads[x] += e.mult;
  for (long long load : rep.node_loads) rep.congestion = std::max(rep.congestion, load);
  return rep;
}

struct VconResult {
  long long congestion = 0;
  LeafEmbedding witness;
};

// Minimum congestion over all subcubic leaf embeddings. Enumerates the
// (2n-5)!! leaf-labeled binary trees by inserting one leaf per tree edge,
// so this is capped to small n.
inline VconResult vcon_exact(const MultiGraph& g, const Budgets& budgets = {}) {
  int n = g.n();
  require(n <= budgets.vcon_max_n, errc::feasibility_cap_exceeded,
          "embedding search capped at " + std::to_string(budgets.vcon_max_n) + " vertices");
  VconResult out;
  if (n == 1) {
    out.witness = LeafEmbedding{1, {}, {0}};
    out.congestion = 0;
    return out;
  }
  if (n == 2) {
    out.witness = LeafEmbedding{2, {{0, 1}}, {0, 1}};
    out.congestion = embedding_congestion(g, out.witness).congestion;
    return out;
  }
  // leaves are nodes 0..n-1; internal nodes n..2n-3 appear in insertion order
  int total = 2 * n - 2;
  std::vector<int> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  long long best = -1;
  std::vector<std::pair<int, int>> edges{{0, 1}};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      budgets.check_deadline("embedding search");
      LeafEmbedding emb{total, edges, identity};
      long long c = embedding_congestion(g, emb).congestion;
      if (best < 0 || c < best) {
        best = c;
        out.witness = emb;
      }
      return;
    }
    int w = n + (i - 2);
    size_t base = edges.size();
    for (size_t j = 0; j < base; ++j) {
      auto [a, b] = edges[j];
      edges[j] = {a, w};
      edges.push_back({w, b});
      edges.push_back({w, i});
      self(self, i + 1);
      edges.pop_back();
      edges.pop_back();
      edges[j] = {a, b};
    }
  };
  rec(rec, 2);
  out.congestion = best;
  return out;
}

// An embedding is itself a tree-cut decomposition once each vertex's leaf
// becomes the singleton bag {v}; meaningful from three vertices up.
inline TreeCutDecomposition embedding_to_tcd(const MultiGraph& g, const LeafEmbedding& emb) {
  check_embedding(g, emb);
  require(g.n() >= 3, errc::too_small, "conversion needs at least three vertices");
  TreeCutDecomposition t;
  t.nodes = emb.nodes;
  t.links = emb.links;
  t.bags.assign(emb.nodes, {});
  for (int v = 0; v < g.n(); ++v) t.bags[emb.leaf_of[v]].push_back(v);
  return t;
}

}  // namespace scramblelab
