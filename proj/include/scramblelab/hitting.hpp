#pragma once

#include <algorithm>
#include <vector>

#include "scramblelab/bits.hpp"
#include "scramblelab/budgets.hpp"

namespace scramblelab {

struct HittingResult {
  int value = 0;
  std::vector<int> witness;  // sorted vertex list
};

namespace detail {

inline int greedy_pick(const std::vector<mask_t>& sets, mask_t chosen, mask_t excluded) {
  // vertex hitting the most not-yet-hit sets; ties to the lowest index
  int best_v = -1, best_score = 0;
  std::vector<int> count(64, 0);
  mask_t seen_vertices = 0;
  for (mask_t s : sets) {
    if (s & chosen) continue;
    mask_t avail = s & ~excluded;
    seen_vertices |= avail;
    while (avail) {
      int v = lowest_bit(avail);
      avail &= avail - 1;
      ++count[v];
    }
  }
  while (seen_vertices) {
    int v = lowest_bit(seen_vertices);
    seen_vertices &= seen_vertices - 1;
    if (count[v] > best_score) {
      best_score = count[v];
      best_v = v;
    }
  }
  return best_v;
}

}  // namespace detail

// Exact minimum hitting set over subsets of a <=64-element universe.
// Branch and bound: binary branching on the vertex hitting the most unhit
// sets (ties to the lowest index), lower bound by greedy disjoint packing.
inline HittingResult exact_min_hitting_set(const std::vector<mask_t>& sets_in,
                                           const Budgets& budgets = {}) {
  for (mask_t s : sets_in) require(s != 0, errc::bad_set, "cannot hit an empty set");
  // drop duplicate sets and supersets of other sets; hitting a subset hits them
  std::vector<mask_t> sets = sets_in;
  std::sort(sets.begin(), sets.end(),
            [](mask_t a, mask_t b) { return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b); });
  std::vector<mask_t> minimal;
  for (mask_t s : sets) {
    bool dominated = false;
    for (mask_t t : minimal)
      if ((t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  sets = std::move(minimal);
  if (sets.empty()) return {};

  // greedy upper bound
  mask_t greedy_mask = 0;
  {
    mask_t chosen = 0;
    while (true) {
      int v = detail::greedy_pick(sets, chosen, 0);
      if (v < 0) break;
      chosen |= bit(v);
    }
    greedy_mask = chosen;
  }
  int best_val = popcount(greedy_mask);
  mask_t best_mask = greedy_mask;

  long long nodes = 0;
  auto rec = [&](auto&& self, mask_t chosen, int count, mask_t excluded) -> void {
    require(++nodes <= budgets.hitting_nodes, errc::feasibility_cap_exceeded,
            "hitting-set search node budget exhausted");
    if ((nodes & 0xFFFF) == 0) budgets.check_deadline("hitting set");
    // collect unhit sets; infeasible if one has no available vertex
    mask_t packing_used = 0;
    int packing = 0;
    bool any_unhit = false;
    for (mask_t s : sets) {
      if (s & chosen) continue;
      any_unhit = true;
      mask_t avail = s & ~excluded;
      if (!avail) return;  // this set can no longer be hit on this branch
      if (!(avail & packing_used)) {
        packing_used |= avail;
        ++packing;
      }
    }
    if (!any_unhit) {
      if (count < best_val) {
        best_val = count;
        best_mask = chosen;
      }
      return;
    }
    if (count + packing >= best_val) return;
    int v = detail::greedy_pick(sets, chosen, excluded);
    self(self, chosen | bit(v), count + 1, excluded);
    self(self, chosen, count, excluded | bit(v));
  };
  rec(rec, 0, 0, 0);
  return {best_val, mask_to_vertices(best_mask)};
}

}  // namespace scramblelab
