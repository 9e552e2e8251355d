#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "scramblelab/multigraph.hpp"

namespace scramblelab {

// All connected simple graphs on n vertices up to isomorphism (canonical
// form = lexicographically smallest edge bitmask over all relabelings).
// Counts for n = 1..6: 1, 1, 2, 6, 21, 112.
inline std::vector<MultiGraph> all_connected_graphs(int n) {
  require(n >= 1 && n <= 6, errc::feasibility_cap_exceeded,
          "exhaustive enumeration capped at 6 vertices");
  std::vector<std::pair<int, int>> pairs;
  int pos[6][6] = {};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos[i][j] = pos[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  int pc = static_cast<int>(pairs.size());
  std::set<unsigned> seen;
  std::vector<MultiGraph> out;
  for (unsigned mask = 0; mask < (1u << pc); ++mask) {
    // connectivity over the pair bitmask
    unsigned reached = 1;
    unsigned frontier = 1;
    while (frontier) {
      unsigned next = 0;
      for (int v = 0; v < n; ++v) {
        if (!(frontier & (1u << v))) continue;
        for (int w = 0; w < n; ++w)
          if (w != v && (mask & (1u << pos[v][w])) && !(reached & (1u << w))) next |= 1u << w;
      }
      reached |= next;
      frontier = next;
    }
    if (reached != (1u << n) - 1) continue;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    unsigned canon = ~0u;
    do {
      unsigned relabeled = 0;
      for (int idx = 0; idx < pc; ++idx)
        if (mask & (1u << idx)) relabeled |= 1u << pos[p[pairs[idx].first]][p[pairs[idx].second]];
      canon = std::min(canon, relabeled);
    } while (std::next_permutation(p.begin(), p.end()));
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (int idx = 0; idx < pc; ++idx)
      if (canon & (1u << idx)) edges.push_back({pairs[idx].first, pairs[idx].second, 1});
    out.emplace_back(n, edges);
  }
  return out;
}

// Random connected simple graph: a random recursive tree plus each extra
// pair independently with the given percent chance. Reproducible from seed.
inline MultiGraph random_connected_graph(int n, int extra_percent, unsigned seed) {
  require(n >= 1 && extra_percent >= 0 && extra_percent <= 100, errc::bad_params,
          "bad random graph parameters");
  std::mt19937 rng(seed);
  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % v);
    present.insert({u, v});
    edges.push_back({u, v, 1});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (present.count({u, v})) continue;
      if (static_cast<int>(rng() % 100) < extra_percent) edges.push_back({u, v, 1});
    }
  return MultiGraph(n, edges);
}

inline MultiGraph random_tree(int n, unsigned seed) {
  return random_connected_graph(n, 0, seed);
}

// Set systems for hitting-set experiments: `count` sets, sizes 1..k.
inline std::vector<std::vector<int>> random_set_system(int n, int k, int count, unsigned seed) {
  require(n >= 1 && k >= 1 && k <= n && count >= 1, errc::bad_params,
          "bad set system parameters");
  std::mt19937 rng(seed);
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < count; ++i) {
    int size = 1 + static_cast<int>(rng() % k);
    std::set<int> s;
    while (static_cast<int>(s.size()) < size) s.insert(static_cast<int>(rng() % n));
    sets.emplace_back(s.begin(), s.end());
  }
  return sets;
}

// Connected spanning subgraph: visit edges in a shuffled order and drop
// each with a coin flip when connectivity survives.
inline MultiGraph random_spanning_connected_subgraph(const MultiGraph& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges = g.edges();
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
    std::swap(order[i], order[rng() % (i + 1)]);
  std::vector<char> dropped(edges.size(), 0);
  for (int idx : order) {
    if (rng() % 2) continue;
    dropped[idx] = 1;
    std::vector<Edge> rest;
    for (size_t j = 0; j < edges.size(); ++j)
      if (!dropped[j]) rest.push_back(edges[j]);
    // connectivity probe without constructing a MultiGraph
    std::vector<std::vector<int>> adj(g.n());
    for (const Edge& e : rest) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> vis(g.n(), 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!vis[y]) {
          vis[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != g.n()) dropped[idx] = 0;  // removal would disconnect; keep it
  }
  std::vector<Edge> rest;
  for (size_t j = 0; j < edges.size(); ++j)
    if (!dropped[j]) rest.push_back(edges[j]);
  return MultiGraph(g.n(), rest);
}

// Brute-force isomorphism for small graphs, multiplicity-aware.
inline bool is_isomorphic(const MultiGraph& a, const MultiGraph& b, int max_n = 8) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  require(a.n() <= max_n, errc::feasibility_cap_exceeded, "isomorphism check cap exceeded");
  std::vector<long long> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> p(a.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < a.n() && match; ++u)
      for (int v = u + 1; v < a.n() && match; ++v)
        match = a.multiplicity(u, v) == b.multiplicity(p[u], p[v]);
    if (match) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace scramblelab
