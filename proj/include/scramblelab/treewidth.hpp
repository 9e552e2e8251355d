#pragma once

#include <algorithm>
#include <vector>

#include "scramblelab/bits.hpp"
#include "scramblelab/budgets.hpp"
#include "scramblelab/multigraph.hpp"

namespace scramblelab {

struct TreewidthResult {
  int width = 0;
  std::vector<int> elimination_order;  // eliminate front first
};

namespace detail {
// Number of vertices outside T u {v} reachable from v through T (the
// back-degree of v if eliminated right after the set T).
inline int elimination_cost(const MultiGraph& g, mask_t t, int v) {
  mask_t seen = bit(v);
  mask_t stack = bit(v);
  mask_t out = 0;
  while (stack) {
    int x = lowest_bit(stack);
    stack &= stack - 1;
    mask_t nb = g.adjacency_mask(x) & ~seen;
    seen |= nb;
    out |= nb & ~t;
    stack |= nb & t;
  }
  return popcount(out & ~bit(v));
}
}  // namespace detail

// Exact treewidth by dynamic programming over elimination prefixes:
// f(S) = min over v in S of max(f(S \ v), cost of eliminating v after S \ v).
// Multiplicities never matter here. Exponential in n, so capped.
inline TreewidthResult treewidth_exact(const MultiGraph& g, const Budgets& budgets = {}) {
  int n = g.n();
  require(n <= budgets.tw_max_n, errc::feasibility_cap_exceeded,
          "treewidth DP capped at " + std::to_string(budgets.tw_max_n) + " vertices");
  mask_t full = full_mask(n);
  std::vector<int> f(static_cast<size_t>(full) + 1, 0);
  std::vector<int> pick(static_cast<size_t>(full) + 1, -1);
  for (mask_t s = 1; s <= full; ++s) {
    if ((s & 0xFFF) == 0) budgets.check_deadline("treewidth");
    int best = g.n() + 1;
    int best_v = -1;
    for (mask_t rest = s; rest;) {
      int v = lowest_bit(rest);
      rest &= rest - 1;
      mask_t prev = s & ~bit(v);
      int cost = std::max(f[prev], detail::elimination_cost(g, prev, v));
      if (cost < best) {
        best = cost;
        best_v = v;
      }
    }
    f[s] = best;
    pick[s] = best_v;
  }
  TreewidthResult out;
  out.width = f[full];
  for (mask_t s = full; s;) {
    int v = pick[s];  // eliminated last within s
    out.elimination_order.push_back(v);
    s &= ~bit(v);
  }
  std::reverse(out.elimination_order.begin(), out.elimination_order.end());
  return out;
}

// Max back-degree of a concrete elimination order; certifies width upper
// bounds independently of the DP.
inline int elimination_order_width(const MultiGraph& g, const std::vector<int>& order) {
  require(static_cast<int>(order.size()) == g.n(), errc::bad_params,
          "elimination order must list every vertex once");
  require_mask_width(g.n(), "elimination width");
  mask_t done = 0;
  int width = 0;
  for (int v : order) {
    g.check_vertex(v);
    require(!has_bit(done, v), errc::bad_params, "elimination order repeats a vertex");
    width = std::max(width, detail::elimination_cost(g, done, v));
    done |= bit(v);
  }
  return width;
}

}  // namespace scramblelab
