#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "scramblelab/bits.hpp"
#include "scramblelab/multigraph.hpp"

namespace scramblelab {

// Visits every connected induced k-vertex subgraph exactly once (Wernicke's
// enumeration: grow from each root v using only vertices > v, extending by
// exclusive neighbors). Emission order is deterministic.
template <typename Fn>
void for_each_connected_k_set(const MultiGraph& g, int k, Fn&& emit) {
  require(k >= 1 && k <= g.n(), errc::bad_params, "subgraph size out of range");
  require_mask_width(g.n(), "for_each_connected_k_set");
  struct Rec {
    const MultiGraph& g;
    int k;
    mask_t above_root;
    Fn& emit;
    void run(mask_t sub, mask_t closed, mask_t ext) {
      if (popcount(sub) == k) {
        emit(sub);
        return;
      }
      while (ext) {
        int w = lowest_bit(ext);
        ext &= ext - 1;
        mask_t closed2 = closed | ext | g.adjacency_mask(w);
        mask_t ext2 = ext | (g.adjacency_mask(w) & above_root & ~closed);
        run(sub | bit(w), closed2, ext2);
      }
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    mask_t above = full_mask(g.n()) & ~(bit(v + 1) - 1);
    mask_t ext = g.adjacency_mask(v) & above;
    Rec rec{g, k, above, emit};
    rec.run(bit(v), bit(v) | g.adjacency_mask(v), ext);
  }
}

// All connected k-subsets as sorted vertex lists, sorted lexicographically.
// Throws FeasibilityCapExceeded when the count would exceed `cap`.
inline std::vector<std::vector<int>> enumerate_connected_subgraphs(const MultiGraph& g, int k,
                                                                   long long cap = 2'000'000) {
  std::vector<std::vector<int>> out;
  for_each_connected_k_set(g, k, [&](mask_t s) {
    require(static_cast<long long>(out.size()) < cap, errc::feasibility_cap_exceeded,
            "connected subgraph enumeration exceeded cap");
    out.push_back(mask_to_vertices(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// alpha_k(G): the largest vertex set whose induced components all have size
// <= k. Branch and bound over vertices in index order.
inline int alpha_k(const MultiGraph& g, int k, int max_n = 24) {
  require(k >= 1, errc::bad_params, "alpha_k needs k >= 1");
  require(g.n() <= max_n, errc::feasibility_cap_exceeded, "alpha_k cap exceeded");
  require_mask_width(g.n(), "alpha_k");
  int n = g.n(), best = 0;
  auto rec = [&](auto&& self, int idx, mask_t included) -> void {
    int size = popcount(included);
    if (size + (n - idx) <= best) return;
    if (idx == n) {
      best = std::max(best, size);
      return;
    }
    mask_t comp = g.component_mask(idx, included | bit(idx));
    if (popcount(comp) <= k) self(self, idx + 1, included | bit(idx));
    self(self, idx + 1, included);
  };
  rec(rec, 0, 0);
  return best;
}

inline int independence_number(const MultiGraph& g, int max_n = 24) { return alpha_k(g, 1, max_n); }

namespace detail {
inline bool components_at_least(const MultiGraph& g, mask_t s, int k) {
  mask_t left = s;
  while (left) {
    mask_t comp = g.component_mask(lowest_bit(left), left);
    if (popcount(comp) < k) return false;
    left &= ~comp;
  }
  return true;
}
}  // namespace detail

// lambda_k(G): the smallest edge set (with multiplicity) whose removal leaves
// every component of size >= k, nullopt when no such set exists. Exact by
// bipartition enumeration: any valid deletion set W induces a bipartition
// (union of components, rest) whose boundary is contained in W and is itself
// valid, so scanning bipartitions with both induced sides having all
// components >= k reaches the optimum.
inline std::optional<long long> lambda_k(const MultiGraph& g, int k, int max_n = 20) {
  require(k >= 1, errc::bad_params, "lambda_k needs k >= 1");
  require(g.n() <= max_n, errc::feasibility_cap_exceeded, "lambda_k cap exceeded");
  require_mask_width(g.n(), "lambda_k");
  if (2 * k > g.n()) return std::nullopt;  // both sides would need >= k vertices
  mask_t all = full_mask(g.n());
  std::optional<long long> best;
  // fix vertex 0 on the A side to halve the scan
  mask_t rest = all & ~bit(0);
  for (mask_t sub = rest;; sub = (sub - 1) & rest) {
    mask_t a = sub | bit(0);
    if (a != all) {
      if (detail::components_at_least(g, a, k) && detail::components_at_least(g, all & ~a, k)) {
        long long val = g.boundary_size(a);
        if (!best || val < *best) best = val;
      }
    }
    if (sub == 0) break;
  }
  return best;
}

// xi_k(G): the smallest edge boundary (with multiplicity) over connected
// k-vertex subsets.
inline long long xi_k(const MultiGraph& g, int k, long long cap = 2'000'000) {
  require(k >= 1 && k <= g.n(), errc::bad_params, "xi_k size out of range");
  long long best = -1, seen = 0;
  for_each_connected_k_set(g, k, [&](mask_t s) {
    require(++seen <= cap, errc::feasibility_cap_exceeded, "xi_k enumeration exceeded cap");
    long long b = g.boundary_size(s);
    if (best < 0 || b < best) best = b;
  });
  return best;
}

}  // namespace scramblelab
