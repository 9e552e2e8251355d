#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "scramblelab/flow.hpp"
#include "scramblelab/hitting.hpp"
#include "scramblelab/multigraph.hpp"
#include "scramblelab/subgraphs.hpp"

namespace scramblelab {

struct OrderReport {
  int hitting = 0;
  std::optional<long long> egg_cut;  // nullopt = infinity (no disjoint egg pair)
  long long order = 0;               // min(hitting, egg_cut)
  std::vector<int> hitting_witness;
  // a minimum egg-cut: removal leaves exactly two components, each holding an
  // egg; one entry per edge copy; nullopt when egg_cut is infinite
  std::optional<std::vector<std::pair<int, int>>> cut_witness;
};

// A scramble: a nonempty collection of nonempty connected vertex sets (eggs)
// on a host graph. Canonical form: eggs deduplicated, each sorted, the
// collection sorted lexicographically. Value type; the order report is cached
// per value (single-threaded first evaluation per object).
class Scramble {
 public:
  Scramble() : Scramble(MultiGraph(), {{0}}) {}  // the single vertegg on K_1

  Scramble(MultiGraph host, std::vector<std::vector<int>> eggs)
      : host_(std::move(host)) {
    require(!eggs.empty(), errc::empty_collection, "a scramble needs at least one egg");
    require_mask_width(host_.n(), "Scramble");
    std::set<std::vector<int>> canon;
    for (auto egg : eggs) {
      require(!egg.empty(), errc::empty_egg, "eggs must be nonempty");
      std::sort(egg.begin(), egg.end());
      egg.erase(std::unique(egg.begin(), egg.end()), egg.end());
      for (int v : egg)
        require(v >= 0 && v < host_.n(), errc::bad_vertex, "egg vertex out of range");
      require(host_.is_connected_subset(egg), errc::disconnected_egg,
              "eggs must induce connected subgraphs");
      canon.insert(std::move(egg));
    }
    eggs_.assign(canon.begin(), canon.end());
    for (const auto& egg : eggs_) masks_.push_back(vertices_to_mask(egg));
  }

  const MultiGraph& host() const { return host_; }
  const std::vector<std::vector<int>>& eggs() const { return eggs_; }
  const std::vector<mask_t>& egg_masks() const { return masks_; }
  int size() const { return static_cast<int>(eggs_.size()); }

  bool is_disjoint() const {
    mask_t seen = 0;
    for (mask_t m : masks_) {
      if (m & seen) return false;
      seen |= m;
    }
    return true;
  }

  const OrderReport& order_report(const Budgets& budgets = {}) const {
    if (!cache_) cache_ = compute_order_(budgets);
    return *cache_;
  }
  long long order(const Budgets& budgets = {}) const { return order_report(budgets).order; }
  int hitting_number(const Budgets& budgets = {}) const { return order_report(budgets).hitting; }
  std::optional<long long> egg_cut_number(const Budgets& budgets = {}) const {
    return order_report(budgets).egg_cut;
  }

 private:
  OrderReport compute_order_(const Budgets& budgets) const {
    OrderReport r;
    HittingResult h = exact_min_hitting_set(masks_, budgets);
    r.hitting = h.value;
    r.hitting_witness = h.witness;
    // egg-cut: min over disjoint egg pairs of the pairwise min edge cut
    long long best = -1;
    int bi = -1, bj = -1;
    EdgeCut best_cut;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) {
        if (masks_[i] & masks_[j]) continue;
        budgets.check_deadline("egg cut");
        EdgeCut c = min_edge_cut(host_, eggs_[i], eggs_[j]);
        if (best < 0 || c.value < best) {
          best = c.value;
          bi = i;
          bj = j;
          best_cut = std::move(c);
        }
      }
    if (best >= 0) {
      r.egg_cut = best;
      r.cut_witness = refine_cut_(bi, bj, best_cut);
      r.order = std::min<long long>(r.hitting, best);
    } else {
      r.order = r.hitting;
    }
    return r;
  }

  // Post-process a minimum A/B cut into an egg-cut witness whose removal
  // leaves exactly two components: take the component D of B in G minus the
  // component of A; every other piece keeps an edge into A's component, so
  // G - boundary(D) has precisely two sides, and |boundary(D)| is still
  // minimum because it separates A from B.
  std::vector<std::pair<int, int>> refine_cut_(int i, int j, const EdgeCut& raw) const {
    mask_t side = 0;
    for (int v = 0; v < host_.n(); ++v)
      if (raw.source_side[v]) side |= bit(v);
    mask_t comp_a = host_.component_mask(eggs_[i][0], side);
    mask_t rest = full_mask(host_.n()) & ~comp_a;
    mask_t comp_b = host_.component_mask(eggs_[j][0], rest);
    std::vector<std::pair<int, int>> cut;
    long long value = 0;
    for (const Edge& e : host_.edges())
      if (has_bit(comp_b, e.u) != has_bit(comp_b, e.v)) {
        value += e.mult;
        for (int c = 0; c < e.mult; ++c) cut.push_back({e.u, e.v});
      }
    require(value == raw.value, errc::precondition_violated,
            "egg-cut refinement changed the cut value");
    return cut;
  }

  MultiGraph host_;
  std::vector<std::vector<int>> eggs_;
  std::vector<mask_t> masks_;
  mutable std::optional<OrderReport> cache_;
};

inline Scramble make_scramble(const MultiGraph& g, std::vector<std::vector<int>> eggs) {
  return Scramble(g, std::move(eggs));
}

// eggs = all single vertices
inline Scramble vertegg_scramble(const MultiGraph& g) {
  std::vector<std::vector<int>> eggs;
  for (int v = 0; v < g.n(); ++v) eggs.push_back({v});
  return Scramble(g, std::move(eggs));
}

// eggs = all connected k-subsets (the k-uniform scramble)
inline Scramble uniform_scramble(const MultiGraph& g, int k, const Budgets& budgets = {}) {
  return Scramble(g, enumerate_connected_subgraphs(g, k, budgets.subgraph_cap));
}

// Removes eggs in canonical order until the hitting number falls to the
// original order; each removal lowers h by at most one, so the walk stops at
// h = order exactly and the result satisfies h(S') = ||S'|| = ||S||.
inline Scramble pare_to_hitting(const Scramble& s, const Budgets& budgets = {}) {
  long long target = s.order(budgets);
  std::vector<std::vector<int>> eggs = s.eggs();
  size_t next = 0;
  Scramble cur = s;
  while (cur.hitting_number(budgets) > target) {
    require(next < eggs.size(), errc::precondition_violated,
            "paring walked past the egg list without reaching the target");
    std::vector<std::vector<int>> reduced = cur.eggs();
    auto it = std::find(reduced.begin(), reduced.end(), eggs[next]);
    reduced.erase(it);
    ++next;
    cur = Scramble(s.host(), std::move(reduced));
  }
  return cur;
}

// Deletes every egg that strictly contains another egg; hitting and egg-cut
// numbers are preserved exactly. The survivors form an inclusion antichain.
inline Scramble prune_nested(const Scramble& s) {
  const auto& masks = s.egg_masks();
  std::vector<std::vector<int>> keep;
  for (int i = 0; i < s.size(); ++i) {
    bool contains_other = false;
    for (int j = 0; j < s.size() && !contains_other; ++j)
      if (j != i && (masks[j] & masks[i]) == masks[j]) contains_other = true;
    if (!contains_other) keep.push_back(s.eggs()[i]);
  }
  return Scramble(s.host(), std::move(keep));
}

// When max degree < sn, a maximum-order scramble needs at least 3*sn - n eggs.
inline long long carton_lower_bound(long long sn, long long n, long long max_degree) {
  require(max_degree < sn, errc::precondition_violated,
          "carton lower bound needs max degree < scramble number");
  return 3 * sn - n;
}

struct SizeLowerBound {
  double egg_count;     // exp(c * n^eps / (d+1))
  double min_egg_size;  // c * sqrt(n) / (d+1)
};

// Growth bound: a scramble of order >= ceil(c * n^(1/2+eps)) on an n-vertex
// graph of max degree d has at least exp(c * n^eps / (d+1)) eggs, each of
// size at least c * sqrt(n) / (d+1).
inline SizeLowerBound scramble_size_lower_bound(long long n, long long d, double c, double eps) {
  require(n >= 1 && d >= 1, errc::bad_params, "size bound needs n >= 1, d >= 1");
  require(c > 1.0 && eps > 0.0, errc::bad_params, "size bound needs c > 1, eps > 0");
  SizeLowerBound b;
  b.egg_count = std::exp(c * std::pow(static_cast<double>(n), eps) / static_cast<double>(d + 1));
  b.min_egg_size = c * std::sqrt(static_cast<double>(n)) / static_cast<double>(d + 1);
  return b;
}

enum class TransferDirection { forward, backward };

// Forward: S lives on G, edge (u,w) of G is subdivided through the new vertex
// v = |V(G)|; v joins every egg containing u. Order never drops and
// disjointness is preserved (only the eggs through u change).
inline Scramble transfer_forward(const Scramble& s, int u, int w) {
  MultiGraph g2 = s.host().subdivide_edge(u, w);
  int v = s.host().n();
  std::vector<std::vector<int>> eggs;
  for (const auto& egg : s.eggs()) {
    std::vector<int> e2 = egg;
    if (std::binary_search(egg.begin(), egg.end(), u)) e2.push_back(v);
    eggs.push_back(std::move(e2));
  }
  return Scramble(g2, std::move(eggs));
}

// Backward: S lives on the subdivided graph, v is the degree-2 subdivision
// vertex being smoothed away; v is deleted from every egg. Requires order >= 3
// (below that the deletion can break the order bookkeeping). Eggs emptied by
// the deletion are dropped; under the precondition that case is unreachable
// (an egg {v} with deg(v)=2 forces order <= 2).
inline Scramble transfer_backward(const Scramble& s, int v, const Budgets& budgets = {}) {
  s.host().check_vertex(v);
  require(s.order(budgets) >= 3, errc::order_too_small,
          "backward transfer needs a scramble of order >= 3");
  MultiGraph g2 = s.host().smooth_vertex(v);
  std::vector<std::vector<int>> eggs;
  for (const auto& egg : s.eggs()) {
    std::vector<int> e2;
    for (int x : egg)
      if (x != v) e2.push_back(x > v ? x - 1 : x);
    if (!e2.empty()) eggs.push_back(std::move(e2));
  }
  require(!eggs.empty(), errc::empty_collection, "backward transfer emptied the scramble");
  return Scramble(g2, std::move(eggs));
}

// Single entry point for both directions. Forward uses (u,w) and ignores v unless given
// (then it must name the fresh vertex); backward uses v and checks (u,w)
// against the neighbors of v when supplied. Pass -1 for unused slots.
inline Scramble subdivision_transfer(const Scramble& s, TransferDirection dir, int u, int w,
                                     int v, const Budgets& budgets = {}) {
  if (dir == TransferDirection::forward) {
    require(v == -1 || v == s.host().n(), errc::bad_params,
            "forward transfer: new vertex is always the next index");
    return transfer_forward(s, u, w);
  }
  require(v >= 0, errc::bad_params, "backward transfer needs the subdivision vertex");
  if (u != -1 || w != -1) {
    const auto& nb = s.host().neighbors(v);
    require(nb.size() == 2, errc::not_degree_two, "backward transfer needs a degree-2 vertex");
    int a = nb[0].first, b = nb[1].first;
    require((u == a && w == b) || (u == b && w == a), errc::bad_params,
            "backward transfer: (u,w) must be the neighbors of v");
  }
  return transfer_backward(s, v, budgets);
}

}  // namespace scramblelab
