#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "scramblelab/multigraph.hpp"

namespace scramblelab {

// Dinic max-flow on a hand-built network. All capacities are integral and
// desk-scale; undirected multigraph edges become symmetric residual arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add_arc(int u, int v, long long cap, long long rev_cap = 0) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], rev_cap});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }
  void add_undirected(int u, int v, long long cap) { add_arc(u, v, cap, cap); }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs_(s, t)) {
      iter_ = head_;
      while (long long pushed = dfs_(s, t, kInf)) total += pushed;
    }
    return total;
  }

  // after max_flow: nodes reachable from s in the residual network
  std::vector<char> source_side(int s) const {
    std::vector<char> side(head_.size(), 0);
    std::vector<int> stack{s};
    side[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !side[arcs_[a].to]) {
          side[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    return side;
  }

  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

 private:
  struct Arc {
    int to, next;
    long long cap;
  };

  bool bfs_(int s, int t) {
    level_.assign(head_.size(), -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int x = q[i];
      for (int a = head_[x]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          q.push_back(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs_(int x, int t, long long limit) {
    if (x == t) return limit;
    for (int& a = iter_[x]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[x] + 1) {
        long long d = dfs_(arc.to, t, std::min(limit, arc.cap));
        if (d > 0) {
          arc.cap -= d;
          arcs_[a ^ 1].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, iter_, level_;
  std::vector<Arc> arcs_;
};

struct EdgeCut {
  long long value = 0;
  std::vector<char> source_side;          // per vertex of G
  std::vector<std::pair<int, int>> cut;   // crossing edges, one entry per copy
};

// Minimum edge cut (counting multiplicity) separating vertex set A from B.
inline EdgeCut min_edge_cut(const MultiGraph& g, const std::vector<int>& a,
                            const std::vector<int>& b) {
  require(!a.empty() && !b.empty(), errc::bad_set, "cut endpoints must be nonempty");
  std::vector<char> ina(g.n(), 0), inb(g.n(), 0);
  for (int v : a) {
    g.check_vertex(v);
    ina[v] = 1;
  }
  for (int v : b) {
    g.check_vertex(v);
    require(!ina[v], errc::bad_set, "cut endpoint sets must be disjoint");
    inb[v] = 1;
  }
  int s = g.n(), t = g.n() + 1;
  FlowNetwork net(g.n() + 2);
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v, e.mult);
  for (int v = 0; v < g.n(); ++v) {
    if (ina[v]) net.add_arc(s, v, FlowNetwork::kInf);
    if (inb[v]) net.add_arc(v, t, FlowNetwork::kInf);
  }
  EdgeCut out;
  out.value = net.max_flow(s, t);
  std::vector<char> side = net.source_side(s);
  out.source_side.assign(side.begin(), side.begin() + g.n());
  for (const Edge& e : g.edges())
    if (out.source_side[e.u] != out.source_side[e.v])
      for (int i = 0; i < e.mult; ++i) out.cut.push_back({e.u, e.v});
  return out;
}

// lambda(G): minimum edge cut over all vertex bipartitions, multiplicity-aware.
inline long long edge_connectivity(const MultiGraph& g) {
  require(g.n() >= 2, errc::bad_params, "edge connectivity needs >= 2 vertices");
  long long best = FlowNetwork::kInf;
  for (int t = 1; t < g.n(); ++t) best = std::min(best, min_edge_cut(g, {0}, {t}).value);
  return best;
}

// kappa(G): vertex connectivity of the underlying simple graph; n-1 for
// complete graphs, else the min vertex cut over non-adjacent pairs.
inline int vertex_connectivity(const MultiGraph& g) {
  require(g.n() >= 2, errc::bad_params, "vertex connectivity needs >= 2 vertices");
  int n = g.n();
  long long best = FlowNetwork::kInf;
  bool complete = true;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      complete = false;
      // split vertices: in(x)=2x, out(x)=2x+1
      FlowNetwork net(2 * n);
      for (int x = 0; x < n; ++x)
        net.add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? FlowNetwork::kInf : 1);
      for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.u + 1, 2 * e.v, FlowNetwork::kInf);
        net.add_arc(2 * e.v + 1, 2 * e.u, FlowNetwork::kInf);
      }
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t));
    }
  if (complete) return n - 1;
  return static_cast<int>(best);
}

}  // namespace scramblelab
