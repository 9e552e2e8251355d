#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scramblelab/chipfiring.hpp"
#include "scramblelab/families.hpp"
#include "scramblelab/flow.hpp"
#include "scramblelab/scramble.hpp"
#include "scramblelab/subgraphs.hpp"
#include "scramblelab/treecut.hpp"
#include "scramblelab/treewidth.hpp"

namespace scramblelab {

namespace detail {
// All connected sets S with v in S, S within `avail`. Each set exactly once:
// every extension vertex is either taken (recurse) or banned for the branch.
template <typename Fn>
void connected_sets_from(const MultiGraph& g, int v, mask_t avail, Fn&& fn) {
  auto rec = [&](auto&& self, mask_t cur, mask_t ext, mask_t forb) -> void {
    fn(cur);
    while (ext) {
      mask_t c = ext & (~ext + 1);
      ext &= ~c;
      mask_t add = g.adjacency_mask(lowest_bit(c)) & avail & ~cur & ~forb & ~ext & ~c;
      self(self, cur | c, ext | add, forb | ext);
      forb |= c;
    }
  };
  rec(rec, bit(v), g.adjacency_mask(v) & avail & ~bit(v), 0);
}

inline MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      edges.push_back({std::min(index[e.u], index[e.v]), std::max(index[e.u], index[e.v]), e.mult});
  return MultiGraph(static_cast<int>(vertices.size()), edges);
}
}  // namespace detail

struct DsnResult {
  long long value = 1;
  Scramble witness;
};

// Exact disjoint scramble number. Searching spanning partitions into
// connected blocks suffices: absorbing an uncovered vertex into an adjacent
// egg keeps the egg count and can only raise pairwise min-cuts.
inline DsnResult dsn_exact(const MultiGraph& g, const Budgets& budgets = {}) {
  int n = g.n();
  require(n <= budgets.dsn_max_n, errc::feasibility_cap_exceeded,
          "disjoint-scramble search capped at " + std::to_string(budgets.dsn_max_n) +
              " vertices");
  mask_t full = full_mask(n);
  constexpr long long kNoPair = std::numeric_limits<long long>::max();
  std::map<std::pair<mask_t, mask_t>, long long> cut_cache;
  auto block_cut = [&](mask_t a, mask_t b) {
    auto key = std::minmax(a, b);
    auto it = cut_cache.find(key);
    if (it != cut_cache.end()) return it->second;
    long long value = min_edge_cut(g, mask_to_vertices(a), mask_to_vertices(b)).value;
    cut_cache.emplace(key, value);
    return value;
  };
  long long best = 0;
  std::vector<mask_t> blocks, best_blocks;
  long long steps = 0;
  auto rec = [&](auto&& self, mask_t assigned, long long cur_e) -> void {
    if (assigned == full) {
      long long k = static_cast<long long>(blocks.size());
      long long value = std::min(k, cur_e);
      if (value > best) {
        best = value;
        best_blocks = blocks;
      }
      return;
    }
    int v = lowest_bit(~assigned & full);
    detail::connected_sets_from(g, v, full & ~assigned, [&](mask_t s) {
      if ((++steps & 0xFFF) == 0) budgets.check_deadline("disjoint-scramble search");
      long long new_e = cur_e;
      for (mask_t b : blocks) {
        new_e = std::min(new_e, block_cut(b, s));
        if (new_e <= best) return;
      }
      long long max_blocks =
          static_cast<long long>(blocks.size()) + 1 + popcount(full & ~assigned & ~s);
      if (std::min(new_e, max_blocks) <= best) return;
      blocks.push_back(s);
      self(self, assigned | s, new_e);
      blocks.pop_back();
    });
  };
  rec(rec, 0, kNoPair);
  std::vector<std::vector<int>> eggs;
  for (mask_t b : best_blocks) eggs.push_back(mask_to_vertices(b));
  DsnResult out{best, Scramble(g, eggs)};
  return out;
}

// max over k in [1,n] of min(k, floor(d*n/k)); ceiling-growth envelope used
// to sanity-check disjoint scramble numbers of bounded-degree graphs.
inline long long dsn_growth_bound(long long n, long long d) {
  require(n >= 1 && d >= 1, errc::bad_params, "need n >= 1 and degree bound >= 1");
  long long best = 0;
  for (long long k = 1; k <= n; ++k) best = std::max(best, std::min(k, d * n / k));
  return best;
}

struct CartesianLowerResult {
  long long bound = 0;  // min(|V(H)|, |V(G)| * lambda(H))
  long long order = 0;  // order of the copies-of-G scramble, >= bound
  Scramble witness;
};

// On the Cartesian product G x H, the eggs {(u,h) : u in V(G)} for each h
// form a disjoint scramble whose order is at least min(|V(H)|, |V(G)|*lambda(H)).
inline CartesianLowerResult dsn_cartesian_lower(const MultiGraph& g, const MultiGraph& h,
                                                const Budgets& budgets = {}) {
  MultiGraph product = MultiGraph::cartesian_product(g, h);
  std::vector<std::vector<int>> eggs;
  for (int y = 0; y < h.n(); ++y) {
    std::vector<int> egg;
    for (int u = 0; u < g.n(); ++u) egg.push_back(u * h.n() + y);
    eggs.push_back(egg);
  }
  CartesianLowerResult out;
  long long lambda_h = h.n() >= 2 ? edge_connectivity(h) : 0;
  out.bound = std::min<long long>(h.n(), static_cast<long long>(g.n()) * lambda_h);
  out.witness = Scramble(product, eggs);
  out.order = out.witness.order_report(budgets).order;
  require(out.order >= out.bound, errc::precondition_violated,
          "copies-of-factor scramble fell below its guaranteed order");
  return out;
}

struct CatalogEntry {
  std::string name;
  Scramble scramble;
  long long order = 0;
};

// Candidate scrambles used for lower bounds: verteggs, the k-uniform
// scrambles, factor-copy scrambles on recognized products, and middle
// verteggs on band graphs. Entries that blow a budget are skipped.
inline std::vector<CatalogEntry> catalog_scrambles(const MultiGraph& g,
                                                   const Budgets& budgets = {}) {
  std::vector<CatalogEntry> out;
  auto try_add = [&](const std::string& name, auto&& make) {
    try {
      Scramble s = make();
      long long order = s.order_report(budgets).order;
      out.push_back({name, std::move(s), order});
    } catch (const error&) {
      // out of budget or not applicable; the catalog is best-effort
    }
  };
  try_add("verteggs", [&] { return vertegg_scramble(g); });
  for (int k = 2; k <= std::min(budgets.epsk_max, g.n()); ++k)
    try_add("uniform-" + std::to_string(k), [&] { return uniform_scramble(g, k, budgets); });
  if (std::optional<FamilySpec> fam = verified_family(g)) {
    auto factor_copies = [&](const MultiGraph& a, const MultiGraph& b, bool left) {
      std::vector<std::vector<int>> eggs;
      if (left) {  // one copy of the left factor per right-factor vertex
        for (int y = 0; y < b.n(); ++y) {
          std::vector<int> egg;
          for (int u = 0; u < a.n(); ++u) egg.push_back(u * b.n() + y);
          eggs.push_back(egg);
        }
      } else {
        for (int u = 0; u < a.n(); ++u) {
          std::vector<int> egg;
          for (int y = 0; y < b.n(); ++y) egg.push_back(u * b.n() + y);
          eggs.push_back(egg);
        }
      }
      return Scramble(g, eggs);
    };
    std::optional<std::pair<MultiGraph, MultiGraph>> factors;
    if (fam->name == "grid")
      factors = {{make_path(fam->params[0]), make_path(fam->params[1])}};
    else if (fam->name == "cylinder")
      factors = {{make_cycle(fam->params[0]), make_path(fam->params[1])}};
    else if (fam->name == "rook")
      factors = {{make_complete(fam->params[0]), make_complete(fam->params[1])}};
    if (factors) {
      try_add("factor-copies-left",
              [&] { return factor_copies(factors->first, factors->second, true); });
      try_add("factor-copies-right",
              [&] { return factor_copies(factors->first, factors->second, false); });
    }
    if (fam->name == "band") {
      int k = fam->params[0];
      try_add("middle-verteggs", [&] {
        std::vector<std::vector<int>> eggs;
        for (int v = k; v < 3 * k; ++v) eggs.push_back({v});
        return Scramble(g, eggs);
      });
    }
  }
  return out;
}

// Two-sided sandwich for the scramble number plus everything computed on
// the way. `upper` empty means no feasible upper bound closed.
struct InvariantInterval {
  long long lower = 1;
  std::optional<long long> upper;
  bool exact = false;
  std::string lower_source = "trivial";
  std::string upper_source;
  std::optional<Scramble> lower_witness;
  std::optional<Scramble> dsn_witness;
  std::optional<long long> tw, dsn, scw, gon;
  std::optional<TreeCutDecomposition> scw_witness;
  std::optional<Divisor> gon_witness;
  std::vector<std::pair<std::string, std::string>> skipped;  // component -> reason
};

inline InvariantInterval sn_interval(const MultiGraph& g, const Budgets& budgets = {}) {
  InvariantInterval out;
  auto skip = [&](const std::string& what, const error& e) {
    out.skipped.emplace_back(what, std::string(e.what()));
  };
  auto raise_lower = [&](long long v, const std::string& source,
                         std::optional<Scramble> witness) {
    if (v > out.lower) {
      out.lower = v;
      out.lower_source = source;
      out.lower_witness = std::move(witness);
    }
  };
  auto drop_upper = [&](long long v, const std::string& source) {
    if (!out.upper || v < *out.upper) {
      out.upper = v;
      out.upper_source = source;
    }
  };
  try {
    TreewidthResult tw = treewidth_exact(g, budgets);
    out.tw = tw.width;
    raise_lower(tw.width, "treewidth", std::nullopt);
    if (g.n() >= 2)
      drop_upper((static_cast<long long>(tw.width) + 1) * g.max_degree() - 1, "degree-bound");
  } catch (const error& e) {
    skip("treewidth", e);
  }
  try {
    DsnResult dsn = dsn_exact(g, budgets);
    out.dsn = dsn.value;
    out.dsn_witness = dsn.witness;
    raise_lower(dsn.value, "disjoint", dsn.witness);
  } catch (const error& e) {
    skip("disjoint", e);
  }
  for (CatalogEntry& entry : catalog_scrambles(g, budgets))
    raise_lower(entry.order, entry.name, std::move(entry.scramble));
  try {
    ScreewidthResult scw = screewidth_exact(g, budgets);
    out.scw = scw.width;
    out.scw_witness = scw.witness;
    drop_upper(scw.width, "screewidth");
  } catch (const error& e) {
    skip("screewidth", e);
  }
  try {
    GonalityResult gon = gonality_exact(g, budgets.gon_degree_cap, budgets);
    out.gon = gon.gonality;
    out.gon_witness = gon.witness;
    drop_upper(gon.gonality, "gonality");
  } catch (const error& e) {
    skip("gonality", e);
  }
  out.exact = out.upper && *out.upper == out.lower;
  return out;
}

namespace detail {
inline bool is_cycle_graph(const MultiGraph& g) {
  if (g.n() < 3 || !g.is_simple()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return true;  // connected and 2-regular simple = a cycle
}

// Part sizes when g is complete multipartite (parts = components of the
// complement); requires at least two parts.
inline std::optional<std::vector<int>> multipartite_parts(const MultiGraph& g) {
  if (!g.is_simple() || g.n() < 2) return std::nullopt;
  int n = g.n();
  std::vector<int> part(n, -1);
  int parts = 0;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    part[v] = parts;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (part[y] < 0 && !g.adjacent(x, y)) {
          part[y] = parts;
          stack.push_back(y);
        }
    }
    ++parts;
  }
  if (parts < 2) return std::nullopt;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((part[u] == part[v]) == g.adjacent(u, v)) return std::nullopt;
  std::vector<int> sizes(parts, 0);
  for (int v = 0; v < n; ++v) ++sizes[part[v]];
  return sizes;
}
}  // namespace detail

struct BruteForceReport {
  long long sn = 0;
  long long carton = 0;
  Scramble witness;  // a minimum-size scramble of maximum order
  bool witness_disjoint = false;
};

// Exhaustive scramble number and carton number for tiny graphs. A scramble
// has order >= k iff every (k-1)-set misses some egg (hitting number >= k)
// and disjoint egg pairs have min-cut >= k (egg-cut >= k); the search covers
// the (k-1)-sets one at a time with compatible eggs.
inline BruteForceReport carton_bruteforce(const MultiGraph& g, const Budgets& budgets = {}) {
  int n = g.n();
  require(n <= budgets.carton_bf_max_n, errc::feasibility_cap_exceeded,
          "scramble brute force capped at " + std::to_string(budgets.carton_bf_max_n) +
              " vertices");
  if (n == 1) return {1, 1, Scramble(g, {{0}}), true};
  mask_t full = full_mask(n);
  std::vector<mask_t> conn;
  for (mask_t s = 1; s <= full; ++s)
    if (g.connected_mask(s)) conn.push_back(s);
  int m = static_cast<int>(conn.size());
  std::vector<std::vector<long long>> cut(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(conn[i] & conn[j])) {
        cut[i][j] = cut[j][i] =
            min_edge_cut(g, mask_to_vertices(conn[i]), mask_to_vertices(conn[j])).value;
      }
  long long steps = 0;
  // Search at level k: cover all (k-1)-sets; minimize=false stops at the
  // first valid scramble, minimize=true finds the fewest-egg one.
  auto search = [&](int k, bool minimize, std::vector<int>& best_eggs) -> bool {
    std::vector<mask_t> holes;  // the (k-1)-subsets of V
    for (mask_t h = 0; h <= full; ++h)
      if (popcount(h) == k - 1) holes.push_back(h);
    int hn = static_cast<int>(holes.size());
    std::vector<unsigned long long> covers(m, 0);
    std::vector<std::vector<int>> candidates(hn);
    int max_cover = 1;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < hn; ++j)
        if (!(conn[i] & holes[j])) {
          covers[i] |= 1ULL << j;
          candidates[j].push_back(i);
        }
      max_cover = std::max(max_cover, popcount(covers[i]));
    }
    for (int j = 0; j < hn; ++j) {
      auto& cand = candidates[j];
      if (cand.empty()) return false;  // some hole is unavoidable
      std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        return popcount(covers[a]) > popcount(covers[b]);
      });
    }
    unsigned long long all = hn == 64 ? ~0ULL : (1ULL << hn) - 1;
    size_t best_size = best_eggs.empty() ? static_cast<size_t>(m) + 1 : best_eggs.size();
    bool found = false;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, unsigned long long covered) -> bool {
      if ((++steps & 0xFFF) == 0) budgets.check_deadline("scramble brute force");
      require(steps < 50'000'000, errc::feasibility_cap_exceeded,
              "scramble brute force exceeded its step budget");
      if (covered == all) {
        if (minimize && chosen.size() < best_size) {
          best_size = chosen.size();
          best_eggs = chosen;
          found = true;
        }
        return true;
      }
      if (minimize) {
        int uncovered = popcount(~covered & all);
        if (chosen.size() + (uncovered + max_cover - 1) / max_cover >= best_size) return false;
      }
      int j = lowest_bit(~covered & all);
      for (int i : candidates[j]) {
        bool ok = true;
        for (int t : chosen) {
          if ((conn[i] & conn[t]) != 0) continue;
          if (cut[std::min(i, t)][std::max(i, t)] < k) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(i);
        bool done = self(self, covered | covers[i]);
        chosen.pop_back();
        if (done && !minimize) return true;
      }
      return false;
    };
    bool hit = rec(rec, 0);
    return minimize ? found : hit;
  };
  BruteForceReport out;
  std::vector<int> ignore;
  for (int k = n; k >= 1; --k) {
    ignore.clear();
    if (k == 1 || search(k, false, ignore)) {
      out.sn = k;
      break;
    }
  }
  std::vector<int> best_eggs;
  if (out.sn == 1) {
    best_eggs = {0};  // the single vertegg {lowest index}; any one egg works
    for (int i = 0; i < m; ++i)
      if (conn[i] == bit(0)) best_eggs = {i};
  } else {
    search(static_cast<int>(out.sn), true, best_eggs);
  }
  std::vector<std::vector<int>> eggs;
  for (int i : best_eggs) eggs.push_back(mask_to_vertices(conn[i]));
  out.carton = static_cast<long long>(eggs.size());
  out.witness = Scramble(g, eggs);
  out.witness_disjoint = out.witness.is_disjoint();
  return out;
}

struct CartonValue {
  long long lower = 1;
  std::optional<long long> upper;  // empty = open above
  bool exact = false;
  std::string source = "open";
  std::optional<Scramble> witness;
  std::optional<InvariantInterval> sn;  // filled when the search path used it
};

// Carton number: family formulas when the structure is certain, tiny brute
// force, the disjoint=sn collapse, and otherwise honest lower bounds only.
inline CartonValue carton_value(const MultiGraph& g, const Budgets& budgets = {}) {
  CartonValue out;
  auto close = [&](long long v, const std::string& source) {
    out.lower = v;
    out.upper = v;
    out.exact = true;
    out.source = source;
  };
  if (detail::is_cycle_graph(g)) {
    close(2, "family:cycle");
    return out;
  }
  if (std::optional<std::vector<int>> parts = detail::multipartite_parts(g)) {
    long long total = 0, biggest = 0;
    for (int s : *parts) {
      total += s;
      biggest = std::max<long long>(biggest, s);
    }
    close(total - biggest, "family:complete-multipartite");
    return out;
  }
  if (std::optional<FamilySpec> fam = verified_family(g)) {
    if (fam->name == "grid" && fam->params[0] >= 2 && fam->params[1] >= 2) {
      close(std::min(fam->params[0], fam->params[1]), "family:grid");
      return out;
    }
    if (fam->name == "cylinder") {
      close(std::min(fam->params[0], 2 * fam->params[1]), "family:cylinder");
      return out;
    }
  }
  if (g.n() <= budgets.carton_bf_max_n) {
    BruteForceReport brute = carton_bruteforce(g, budgets);
    close(brute.carton, "brute-force");
    out.witness = brute.witness;
    return out;
  }
  InvariantInterval sn = sn_interval(g, budgets);
  out.sn = sn;
  if (sn.exact && sn.dsn && *sn.dsn == sn.lower && sn.dsn_witness) {
    // disjoint number meets the scramble number: the pared disjoint witness
    // has exactly sn eggs, and no scramble of that order can have fewer
    Scramble pared = pare_to_hitting(*sn.dsn_witness, budgets);
    close(sn.lower, "disjoint-equals-sn");
    out.witness = pared;
    return out;
  }
  out.lower = sn.lower;  // cart >= sn >= its lower bound
  out.source = "open";
  if (sn.exact && sn.dsn && *sn.dsn < sn.lower) {
    out.lower = sn.lower + 1;  // cart = sn would force dsn = sn
    out.source = "open-above-sn";
  }
  if (g.max_degree() < sn.lower)
    out.lower = std::max(out.lower, 3 * sn.lower - g.n());
  return out;
}

struct BridgeComposeResult {
  long long carton = 0;
  long long sn_primary = 0, carton_primary = 0;      // chosen component
  long long sn_secondary = 0, carton_secondary = 0;  // the other one
};

namespace detail {
inline std::pair<long long, long long> component_sn_cart(const MultiGraph& g,
                                                         const Budgets& budgets) {
  if (g.n() <= budgets.carton_bf_max_n) {
    BruteForceReport brute = carton_bruteforce(g, budgets);
    return {brute.sn, brute.carton};
  }
  CartonValue cart = carton_value(g, budgets);
  require(cart.exact, errc::feasibility_cap_exceeded,
          "bridge component carton number not pinned");
  long long sn_value = 0;
  if (cart.sn && cart.sn->exact) {
    sn_value = cart.sn->lower;
  } else {
    InvariantInterval sn = sn_interval(g, budgets);
    require(sn.exact, errc::feasibility_cap_exceeded, "bridge component sn not pinned");
    sn_value = sn.lower;
  }
  return {sn_value, *cart.upper};
}
}  // namespace detail

// cart(G) when G is two graphs joined by a bridge: the carton number of the
// dominant side (larger sn; ties prefer the smaller carton number).
inline BridgeComposeResult bridge_compose_carton(const MultiGraph& g, int u, int v,
                                                 const Budgets& budgets = {}) {
  g.check_vertex(u);
  g.check_vertex(v);
  require(g.multiplicity(u, v) == 1, errc::not_a_bridge,
          "bridge must be a single edge copy between the endpoints");
  std::vector<Edge> remaining;
  for (const Edge& e : g.edges()) {
    Edge copy = e;
    if (e.u == std::min(u, v) && e.v == std::max(u, v)) {
      if (e.mult == 1) continue;
      copy.mult -= 1;
    }
    remaining.push_back(copy);
  }
  // components of G minus the bridge
  std::vector<std::vector<int>> adj(g.n());
  for (const Edge& e : remaining) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> comp(g.n(), -1);
  int comps = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = comps;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = comps;
          stack.push_back(y);
        }
    }
    ++comps;
  }
  require(comps == 2, errc::not_a_bridge, "removing the edge must split the graph in two");
  std::vector<std::vector<int>> sides(2);
  for (int x = 0; x < g.n(); ++x) sides[comp[x]].push_back(x);
  auto [sn_a, cart_a] = detail::component_sn_cart(detail::induced_subgraph(g, sides[0]), budgets);
  auto [sn_b, cart_b] = detail::component_sn_cart(detail::induced_subgraph(g, sides[1]), budgets);
  BridgeComposeResult out;
  bool a_first = sn_a != sn_b ? sn_a > sn_b : cart_a <= cart_b;
  out.sn_primary = a_first ? sn_a : sn_b;
  out.carton_primary = a_first ? cart_a : cart_b;
  out.sn_secondary = a_first ? sn_b : sn_a;
  out.carton_secondary = a_first ? cart_b : cart_a;
  out.carton = out.carton_primary;
  return out;
}

struct FiveInvariantReport {
  bool precondition_met = false;  // lambda >= gonality
  long long lambda = 0;
  long long k = 0;  // the gonality
  std::optional<long long> dsn, sn_lower, sn_upper, cart_lower, cart_upper, scw, gon;
  std::vector<std::pair<std::string, std::string>> skipped;
  bool all_equal = false;  // every computed invariant equals k
};

// When G is k-edge-connected with gonality k, the disjoint scramble number,
// scramble number, carton number, screewidth, and gonality all collapse to k.
inline FiveInvariantReport five_invariant_check(const MultiGraph& g,
                                                const Budgets& budgets = {}) {
  FiveInvariantReport out;
  GonalityResult gon = gonality_exact(g, budgets.gon_degree_cap, budgets);
  out.gon = gon.gonality;
  out.k = gon.gonality;
  out.lambda = g.n() >= 2 ? edge_connectivity(g) : 0;
  out.precondition_met = g.n() == 1 ? gon.gonality == 1 : out.lambda >= gon.gonality;
  if (!out.precondition_met) return out;
  auto attempt = [&](const std::string& what, auto&& fn) {
    try {
      fn();
    } catch (const error& e) {
      out.skipped.emplace_back(what, std::string(e.what()));
    }
  };
  attempt("disjoint", [&] { out.dsn = dsn_exact(g, budgets).value; });
  attempt("screewidth", [&] { out.scw = screewidth_exact(g, budgets).width; });
  attempt("sn", [&] {
    InvariantInterval sn = sn_interval(g, budgets);
    out.sn_lower = sn.lower;
    if (sn.upper) out.sn_upper = *sn.upper;
  });
  attempt("carton", [&] {
    CartonValue cart = carton_value(g, budgets);
    out.cart_lower = cart.lower;
    if (cart.upper) out.cart_upper = *cart.upper;
  });
  out.all_equal = true;
  for (const std::optional<long long>& v :
       {out.dsn, out.sn_lower, out.sn_upper, out.cart_lower, out.cart_upper, out.scw, out.gon})
    if (v && *v != out.k) out.all_equal = false;
  return out;
}

struct ChainReport {
  InvariantInterval sn;
  bool sn_pinned = false;
  bool ok = true;                  // no computed inequality violated
  std::vector<std::string> notes;  // human-readable violations
};

// The sandwich tw <= sn <= min(scw, gon) and sn <= (tw+1)*maxdeg - 1,
// checked with whatever components were feasible.
inline ChainReport bound_chain_check(const MultiGraph& g, const Budgets& budgets = {}) {
  ChainReport out;
  out.sn = sn_interval(g, budgets);
  out.sn_pinned = out.sn.exact;
  if (!out.sn_pinned) return out;
  long long sn = out.sn.lower;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      out.ok = false;
      out.notes.push_back(what);
    }
  };
  if (out.sn.tw) expect(*out.sn.tw <= sn, "treewidth exceeds the scramble number");
  if (out.sn.scw) expect(sn <= *out.sn.scw, "scramble number exceeds screewidth");
  if (out.sn.gon) expect(sn <= *out.sn.gon, "scramble number exceeds gonality");
  if (out.sn.tw && g.n() >= 2)
    expect(sn <= (*out.sn.tw + 1) * g.max_degree() - 1,
           "scramble number exceeds the treewidth-degree bound");
  return out;
}

}  // namespace scramblelab
