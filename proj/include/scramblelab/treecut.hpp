#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scramblelab/bits.hpp"
#include "scramblelab/budgets.hpp"
#include "scramblelab/multigraph.hpp"

namespace scramblelab {

// A tree whose nodes carry disjoint (possibly empty) bags covering V.
struct TreeCutDecomposition {
  int nodes = 1;
  std::vector<std::pair<int, int>> links;   // tree edges, nodes-1 of them
  std::vector<std::vector<int>> bags;       // one per node, may be empty
};

struct TcdWidthReport {
  long long width = 0;
  long long link_width = 0;                 // max adhesion over links
  long long node_width = 0;                 // max node contribution
  std::vector<long long> link_values;       // aligned with links
  std::vector<long long> node_values;       // aligned with nodes
};

namespace detail {
// vertex -> owning tree node, after validating the decomposition shape
inline std::vector<int> tcd_vertex_owner(const MultiGraph& g, const TreeCutDecomposition& t) {
  require(t.nodes >= 1, errc::invalid_decomposition, "decomposition needs a node");
  require(static_cast<int>(t.bags.size()) == t.nodes, errc::invalid_decomposition,
          "need exactly one bag per node");
  require(static_cast<int>(t.links.size()) == t.nodes - 1, errc::invalid_decomposition,
          "a tree on k nodes has k-1 links");
  std::vector<std::vector<int>> adj(t.nodes);
  for (const auto& [a, b] : t.links) {
    require(a >= 0 && a < t.nodes && b >= 0 && b < t.nodes, errc::invalid_decomposition,
            "link endpoint out of range");
    require(a != b, errc::invalid_decomposition, "link endpoints must differ");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(t.nodes, 0);
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
  require(reached == t.nodes, errc::invalid_decomposition, "links do not form a tree");
  std::vector<int> owner(g.n(), -1);
  for (int b = 0; b < t.nodes; ++b)
    for (int v : t.bags[b]) {
      g.check_vertex(v);
      require(owner[v] < 0, errc::invalid_decomposition,
              "vertex " + std::to_string(v) + " appears in two bags");
      owner[v] = b;
    }
  for (int v = 0; v < g.n(); ++v)
    require(owner[v] >= 0, errc::invalid_decomposition,
            "vertex " + std::to_string(v) + " is in no bag");
  return owner;
}
}  // namespace detail

inline void check_tree_cut(const MultiGraph& g, const TreeCutDecomposition& t) {
  (void)detail::tcd_vertex_owner(g, t);
}

// Width of a decomposition: the max over link adhesions (edges crossing the
// bipartition a link induces) and node contributions. A leaf contributes its
// bag size; an inner node adds the edges tunneling past it, i.e. edges whose
// endpoints sit in different components of the tree minus that node.
inline TcdWidthReport tcd_width(const MultiGraph& g, const TreeCutDecomposition& t) {
  std::vector<int> owner = detail::tcd_vertex_owner(g, t);
  std::vector<std::vector<int>> adj(t.nodes);
  for (const auto& [a, b] : t.links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  TcdWidthReport rep;
  // component labels of the tree with one node removed
  auto split_at = [&](int b) {
    std::vector<int> comp(t.nodes, -1);
    int next = 0;
    for (int s : adj[b]) {
      if (comp[s] >= 0) continue;
      comp[s] = next;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (y != b && comp[y] < 0) {
            comp[y] = comp[x];
            stack.push_back(y);
          }
      }
      ++next;
    }
    return comp;
  };
  for (const auto& [a, b] : t.links) {
    std::vector<int> comp = split_at(a);
    std::vector<char> side(g.n(), 0);  // vertices owned by b's side of the link
    for (int v = 0; v < g.n(); ++v)
      side[v] = owner[v] != a && comp[owner[v]] == comp[b];
    long long adhesion = 0;
    for (const Edge& e : g.edges())
      if (side[e.u] != side[e.v]) adhesion += e.mult;
    rep.link_values.push_back(adhesion);
    rep.link_width = std::max(rep.link_width, adhesion);
  }
  for (int b = 0; b < t.nodes; ++b) {
    long long value = static_cast<long long>(t.bags[b].size());
    if (adj[b].size() > 1) {
      std::vector<int> comp = split_at(b);
      for (const Edge& e : g.edges()) {
        if (owner[e.u] == b || owner[e.v] == b) continue;
        if (comp[owner[e.u]] != comp[owner[e.v]]) value += e.mult;
      }
    }
    rep.node_values.push_back(value);
    rep.node_width = std::max(rep.node_width, value);
  }
  rep.width = std::max(rep.link_width, rep.node_width);
  return rep;
}

struct ScreewidthResult {
  long long width = 0;
  TreeCutDecomposition witness;
};

namespace detail {
struct ScwChoice {
  mask_t bag = 0;
  std::vector<mask_t> blocks;
};

class ScwSolver {
 public:
  ScwSolver(const MultiGraph& g, const Budgets& budgets) : g_(g), budgets_(budgets) {
    int n = g.n();
    full_ = full_mask(n);
    cut_.assign(static_cast<size_t>(full_) + 1, 0);
    for (mask_t s = 1; s < full_; ++s) cut_[s] = g.boundary_size(s);
    memo_.assign(static_cast<size_t>(full_) + 1, -1);
    choice_.resize(static_cast<size_t>(full_) + 1);
  }

  long long top(ScwChoice& out) {
    long long best = solve_region(full_, /*has_parent=*/false);
    out = choice_[full_];
    return best;
  }

  long long subtree(mask_t r) { return solve_region(r, true); }
  const ScwChoice& choice(mask_t r) const { return choice_[r]; }

 private:
  long long solve_region(mask_t r, bool has_parent) {
    if (has_parent && memo_[r] >= 0) return memo_[r];
    budgets_.check_deadline("screewidth");
    long long best = popcount(r);  // whole region in one leaf bag
    ScwChoice pick{r, {}};
    for (mask_t x = r;;) {  // submasks of r, descending; skip x == r
      x = (x - 1) & r;
      if (static_cast<long long>(popcount(x)) < best) {
        mask_t rest = r & ~x;
        std::vector<mask_t> blocks;
        partitions(rest, rest, x, r, has_parent, blocks, best, pick);
      }
      if (x == 0) break;
    }
    if (has_parent) memo_[r] = best;
    choice_[r] = pick;
    return best;
  }

  // Enumerate partitions of `rest` into blocks (lowest remaining vertex joins
  // an existing block or opens a new one), scoring each completed partition.
  void partitions(mask_t rest, mask_t whole, mask_t bag, mask_t r, bool has_parent,
                  std::vector<mask_t>& blocks, long long& best, ScwChoice& pick) {
    if (rest == 0) {
      score(whole, bag, r, has_parent, blocks, best, pick);
      return;
    }
    mask_t v = bit(lowest_bit(rest));
    for (size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= v;
      partitions(rest & ~v, whole, bag, r, has_parent, blocks, best, pick);
      blocks[i] &= ~v;
    }
    blocks.push_back(v);
    partitions(rest & ~v, whole, bag, r, has_parent, blocks, best, pick);
    blocks.pop_back();
  }

  void score(mask_t whole, mask_t bag, mask_t r, bool has_parent,
             const std::vector<mask_t>& blocks, long long& best, ScwChoice& pick) {
    (void)whole;
    size_t k = blocks.size();
    if (bag == 0 && k < 2) return;  // an empty bag needs branching to matter
    long long child_max = 0;
    for (mask_t b : blocks) {
      child_max = std::max(child_max, std::max(cut_[b], subtree(b)));
      if (child_max >= best) return;
    }
    long long contrib = popcount(bag);
    int degree = static_cast<int>(k) + (has_parent ? 1 : 0);
    if (degree > 1) {
      // region id per vertex: blocks 0..k-1, outside-of-r = k, bag = -1
      int region[64];
      for (int u = 0; u < g_.n(); ++u) {
        if (has_bit(bag, u))
          region[u] = -1;
        else if (!has_bit(r, u))
          region[u] = static_cast<int>(k);
        else
          region[u] = -2;
      }
      for (size_t i = 0; i < k; ++i)
        for (mask_t b = blocks[i]; b;) {
          int u = lowest_bit(b);
          b &= b - 1;
          region[u] = static_cast<int>(i);
        }
      for (const Edge& e : g_.edges()) {
        int ru = region[e.u], rv = region[e.v];
        if (ru < 0 || rv < 0 || ru == rv) continue;
        contrib += e.mult;
        if (contrib >= best) return;
      }
    }
    long long value = std::max(contrib, child_max);
    if (value < best) {
      best = value;
      pick.bag = bag;
      pick.blocks = blocks;
    }
  }

  const MultiGraph& g_;
  Budgets budgets_;
  mask_t full_ = 0;
  std::vector<long long> cut_;
  std::vector<long long> memo_;
  std::vector<ScwChoice> choice_;
};
}  // namespace detail

// Exact screewidth: minimum width over all tree-cut decompositions, found by
// dynamic programming over rooted regions (a region = union of bags in a
// subtree). Exponential, so capped; returns an optimal decomposition too.
inline ScreewidthResult screewidth_exact(const MultiGraph& g, const Budgets& budgets = {}) {
  int n = g.n();
  require(n <= budgets.scw_max_n, errc::feasibility_cap_exceeded,
          "screewidth search capped at " + std::to_string(budgets.scw_max_n) + " vertices");
  detail::ScwSolver solver(g, budgets);
  detail::ScwChoice top;
  ScreewidthResult out;
  out.width = solver.top(top);
  TreeCutDecomposition& t = out.witness;
  t.nodes = 0;
  t.links.clear();
  t.bags.clear();
  auto build = [&](auto&& self, const detail::ScwChoice& c) -> int {
    int id = t.nodes++;
    t.bags.push_back(mask_to_vertices(c.bag));
    for (mask_t b : c.blocks) {
      int child = self(self, solver.choice(b));
      t.links.emplace_back(id, child);
    }
    return id;
  };
  build(build, top);
  return out;
}

}  // namespace scramblelab
