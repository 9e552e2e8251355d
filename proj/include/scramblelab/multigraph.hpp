#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "scramblelab/bits.hpp"
#include "scramblelab/errors.hpp"

namespace scramblelab {

struct Edge {
  int u = 0, v = 0;  // u < v
  int mult = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Connected loopless multigraph on vertices 0..n-1. Value type: all mutating
// operations return new graphs. Equality is canonical (n + sorted edge
// multiset); isomorphism is deliberately not part of the type.
class MultiGraph {
 public:
  MultiGraph() : MultiGraph(1, {}) {}

  MultiGraph(int n, std::vector<Edge> edges) : n_(n) {
    require(n >= 1, errc::bad_params, "graph needs at least one vertex");
    std::map<std::pair<int, int>, long long> acc;
    for (const Edge& e : edges) {
      require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, errc::bad_index,
              "edge endpoint out of range");
      require(e.u != e.v, errc::self_loop, "self loops are not allowed");
      require(e.mult >= 1, errc::bad_params, "edge multiplicity must be >= 1");
      acc[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
    }
    edges_.reserve(acc.size());
    adj_.assign(n_, {});
    degree_.assign(n_, 0);
    for (const auto& [uv, m] : acc) {
      require(m <= 1'000'000'000, errc::bad_params, "edge multiplicity overflow");
      edges_.push_back({uv.first, uv.second, static_cast<int>(m)});
      adj_[uv.first].push_back({uv.second, static_cast<int>(m)});
      adj_[uv.second].push_back({uv.first, static_cast<int>(m)});
      degree_[uv.first] += static_cast<int>(m);
      degree_[uv.second] += static_cast<int>(m);
    }
    require(is_connected_(), errc::disconnected, "graph must be connected");
    if (n_ <= 64) {
      adj_mask_.assign(n_, 0);
      for (const Edge& e : edges_) {
        adj_mask_[e.u] |= bit(e.v);
        adj_mask_[e.v] |= bit(e.u);
      }
    }
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // neighbor list as (vertex, multiplicity), sorted by vertex
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {  // counts multiplicity
    check_vertex(v);
    return degree_[v];
  }
  int multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    for (const auto& [w, m] : adj_[u])
      if (w == v) return m;
    return 0;
  }
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }
  long long edge_count() const {  // with multiplicity
    long long m = 0;
    for (const Edge& e : edges_) m += e.mult;
    return m;
  }
  bool is_simple() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.mult == 1; });
  }
  int min_degree() const { return *std::min_element(degree_.begin(), degree_.end()); }
  int max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

  // adjacency bitmask (simple view); only valid when n <= 64
  mask_t adjacency_mask(int v) const {
    require_mask_width(n_, "adjacency_mask");
    return adj_mask_[v];
  }

  void check_vertex(int v) const {
    require(v >= 0 && v < n_, errc::bad_vertex, "vertex index out of range");
  }

  // ---- induced-subset connectivity ----------------------------------------

  bool is_connected_subset(const std::vector<int>& vs) const {
    if (vs.empty()) return false;
    std::vector<char> in(n_, 0), seen(n_, 0);
    for (int v : vs) {
      check_vertex(v);
      in[v] = 1;
    }
    std::queue<int> q;
    q.push(vs[0]);
    seen[vs[0]] = 1;
    int reached = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++reached;
      for (const auto& [w, m] : adj_[x]) {
        (void)m;
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    int distinct = 0;
    for (int v = 0; v < n_; ++v) distinct += (in[v] != 0);
    return reached == distinct;
  }

  bool connected_mask(mask_t s) const {
    if (!s) return false;
    require_mask_width(n_, "connected_mask");
    mask_t seen = bit(lowest_bit(s));
    mask_t frontier = seen;
    while (frontier) {
      mask_t next = 0;
      mask_t f = frontier;
      while (f) {
        int v = lowest_bit(f);
        f &= f - 1;
        next |= adj_mask_[v] & s & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }

  // component (as mask) of `v` inside induced subset `s`
  mask_t component_mask(int v, mask_t s) const {
    require_mask_width(n_, "component_mask");
    mask_t seen = bit(v);
    mask_t frontier = seen;
    while (frontier) {
      mask_t next = 0;
      mask_t f = frontier;
      while (f) {
        int x = lowest_bit(f);
        f &= f - 1;
        next |= adj_mask_[x] & s & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // components of the graph restricted to `sub` (all vertices if empty)
  std::vector<std::vector<int>> components(const std::vector<int>& sub = {}) const {
    std::vector<char> in(n_, 0);
    if (sub.empty())
      std::fill(in.begin(), in.end(), 1);
    else
      for (int v : sub) {
        check_vertex(v);
        in[v] = 1;
      }
    std::vector<char> seen(n_, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n_; ++s) {
      if (!in[s] || seen[s]) continue;
      std::vector<int> comp;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        comp.push_back(x);
        for (const auto& [w, m] : adj_[x]) {
          (void)m;
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // edges (with multiplicity) leaving vertex set `s`
  long long boundary_size(mask_t s) const {
    require_mask_width(n_, "boundary_size");
    long long total = 0;
    for (const Edge& e : edges_)
      if (has_bit(s, e.u) != has_bit(s, e.v)) total += e.mult;
    return total;
  }

  // ---- local surgery -------------------------------------------------------

  // Replaces one copy of edge (u,w) by a path u - x - w through a fresh vertex
  // x = n. Returns the new graph; x always gets the highest index.
  MultiGraph subdivide_edge(int u, int w) const {
    check_vertex(u);
    check_vertex(w);
    require(u != w, errc::self_loop, "cannot subdivide a loop");
    require(multiplicity(u, w) >= 1, errc::no_such_edge, "no edge to subdivide");
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
      if ((e.u == std::min(u, w)) && (e.v == std::max(u, w))) {
        if (e.mult > 1) es.push_back({e.u, e.v, e.mult - 1});
      } else {
        es.push_back(e);
      }
    }
    es.push_back({std::min(u, n_), std::max(u, n_), 1});
    es.push_back({std::min(w, n_), std::max(w, n_), 1});
    return MultiGraph(n_ + 1, es);
  }

  // Inverse of subdivision at a degree-two vertex with two distinct simple
  // neighbors: removes v and joins its neighbors. Vertices above v shift down.
  MultiGraph smooth_vertex(int v) const {
    check_vertex(v);
    require(degree_[v] == 2, errc::not_degree_two, "smoothing needs a degree-2 vertex");
    require(adj_[v].size() == 2, errc::neighbors_not_distinct,
            "smoothing needs two distinct neighbors");
    int a = adj_[v][0].first, b = adj_[v][1].first;
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
      if (e.u == v || e.v == v) continue;
      es.push_back({shift(e.u), shift(e.v), e.mult});
    }
    int sa = shift(a), sb = shift(b);
    es.push_back({std::min(sa, sb), std::max(sa, sb), 1});
    return MultiGraph(n_ - 1, es);
  }

  // Multiplicities collapsed to 1 (used by treewidth and friends).
  MultiGraph simplified() const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_) es.push_back({e.u, e.v, 1});
    return MultiGraph(n_, es);
  }

  // ---- global constructions ------------------------------------------------

  // Vertex (u,h) of a [] b gets index u * b.n() + h. Edge multiplicities are
  // copied from the factor supplying the edge.
  static MultiGraph cartesian_product(const MultiGraph& a, const MultiGraph& b) {
    std::vector<Edge> es;
    auto id = [&](int u, int h) { return u * b.n() + h; };
    for (int u = 0; u < a.n(); ++u)
      for (const Edge& e : b.edges()) es.push_back({id(u, e.u), id(u, e.v), e.mult});
    for (int h = 0; h < b.n(); ++h)
      for (const Edge& e : a.edges())
        es.push_back({std::min(id(e.u, h), id(e.v, h)), std::max(id(e.u, h), id(e.v, h)), e.mult});
    return MultiGraph(a.n() * b.n(), es);
  }

  // Vertices are edge *copies* (parallel copies are distinct vertices), listed
  // in sorted-edge order; two copies are adjacent iff they share an endpoint.
  MultiGraph line_graph() const {
    std::vector<std::pair<int, int>> copies;
    for (const Edge& e : edges_)
      for (int i = 0; i < e.mult; ++i) copies.push_back({e.u, e.v});
    require(!copies.empty(), errc::bad_params, "line graph of an edgeless graph");
    std::vector<Edge> es;
    for (int i = 0; i < static_cast<int>(copies.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(copies.size()); ++j) {
        auto [a, b] = copies[i];
        auto [c, d] = copies[j];
        if (a == c || a == d || b == c || b == d) es.push_back({i, j, 1});
      }
    return MultiGraph(static_cast<int>(copies.size()), es);
  }

  // Shortest cycle length counted with multiplicity (a doubled edge is a
  // 2-cycle); nullopt when acyclic.
  std::optional<int> girth() const {
    for (const Edge& e : edges_)
      if (e.mult >= 2) return 2;
    std::optional<int> best;
    for (int s = 0; s < n_; ++s) {
      std::vector<int> dist(n_, -1), parent(n_, -1);
      std::queue<int> q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (const auto& [w, m] : adj_[x]) {
          (void)m;
          if (dist[w] < 0) {
            dist[w] = dist[x] + 1;
            parent[w] = x;
            q.push(w);
          } else if (w != parent[x] && x < w) {
            // non-tree edge: cycle through s of length <= dist[x]+dist[w]+1
            int len = dist[x] + dist[w] + 1;
            if (!best || len < *best) best = len;
          }
        }
      }
    }
    return best;
  }

  // optional family annotation; carried through file io, ignored by equality
  const std::optional<std::string>& annotation() const { return annotation_; }
  MultiGraph with_annotation(std::string tag) const {
    MultiGraph g = *this;
    g.annotation_ = std::move(tag);
    return g;
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  bool is_connected_() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++cnt;
      for (const auto& [w, m] : adj_[x]) {
        (void)m;
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    return cnt == n_;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> degree_;
  std::vector<mask_t> adj_mask_;
  std::optional<std::string> annotation_;
};

}  // namespace scramblelab
