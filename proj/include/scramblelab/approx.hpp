#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "scramblelab/budgets.hpp"
#include "scramblelab/multigraph.hpp"
#include "scramblelab/subgraphs.hpp"

namespace scramblelab {

enum class ApproxDirection { minimize, maximize };

struct ApproxResult {
  double value = 0;
  double factor = 1;  // guarantee: OPT <= value <= factor * OPT (minimize side)
  ApproxDirection direction = ApproxDirection::minimize;
  std::vector<int> witness;                   // hitting set / vertex cover
  std::vector<std::pair<int, int>> matching;  // for the matching-based bound
  int k = 0;                                  // set-size bound in play, if any
  int case_tag = 0;                           // matched family case (1-4), if any
};

// Local-ratio k-approximation of the minimum hitting set: repeatedly take
// the first unhit set in canonical order and add all of its vertices. The
// selected sets are pairwise disjoint, so OPT >= selections and the answer
// is at most k times OPT.
inline ApproxResult hitting_set_k_approx(int n, std::vector<std::vector<int>> sets, int k) {
  require(n >= 1 && k >= 1, errc::bad_params, "need n >= 1 and k >= 1");
  for (std::vector<int>& s : sets) {
    require(!s.empty(), errc::bad_set, "sets must be nonempty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
      require(v >= 0 && v < n, errc::bad_set, "set member out of range");
    require(static_cast<int>(s.size()) <= k, errc::set_too_large,
            "a set exceeds the size bound k");
  }
  std::sort(sets.begin(), sets.end());
  std::vector<char> hit(n, 0);
  std::vector<int> chosen;
  for (const std::vector<int>& s : sets) {
    bool covered = false;
    for (int v : s) covered = covered || hit[v];
    if (covered) continue;
    for (int v : s) {
      hit[v] = 1;
      chosen.push_back(v);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  ApproxResult out;
  out.value = static_cast<double>(chosen.size());
  out.factor = k;
  out.witness = std::move(chosen);
  out.k = k;
  return out;
}

// k-approximates n - alpha_{k-1}(G) by hitting the k-uniform scramble: a
// vertex set meets every connected k-set exactly when its complement has
// components smaller than k.
inline ApproxResult approx_n_minus_alpha(const MultiGraph& g, int k,
                                         const Budgets& budgets = {}) {
  require(k >= 1, errc::bad_params, "need k >= 1");
  std::vector<std::vector<int>> sets =
      enumerate_connected_subgraphs(g, k, budgets.subgraph_cap);
  return hitting_set_k_approx(g.n(), std::move(sets), k);
}

// Greedy maximal matching; both endpoints form a vertex cover of size at
// most twice the minimum, i.e. at most 2(n - alpha(G)).
inline ApproxResult gavril_2approx(const MultiGraph& g) {
  require(g.is_simple(), errc::not_simple, "matching bound needs a simple graph");
  std::vector<char> used(g.n(), 0);
  ApproxResult out;
  for (const Edge& e : g.edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    out.matching.emplace_back(e.u, e.v);
    out.witness.push_back(e.u);
    out.witness.push_back(e.v);
  }
  std::sort(out.witness.begin(), out.witness.end());
  out.value = static_cast<double>(out.witness.size());
  out.factor = 2;
  out.k = 2;
  return out;
}

// Families where a constant-factor approximation of both the scramble
// number and the gonality is known. Cases are tried in numeric order; the
// first hit decides the hitting-set size k and the factor.
inline ApproxResult family_gon_sn_approx(const MultiGraph& g, const Budgets& budgets = {}) {
  require(g.is_simple(), errc::not_simple, "family dispatch needs a simple graph");
  int n = g.n();
  long long delta = g.min_degree();
  std::optional<int> girth = g.girth();
  auto girth_at_least = [&](int t) { return !girth || *girth >= t; };
  int case_tag = 0;
  int k = 0;
  double factor = 0;
  if (girth_at_least(4) && delta >= 3 && xi_k(g, 3, budgets.subgraph_cap) >= n + 1) {
    case_tag = 1, k = 3, factor = 3;
  } else if (girth_at_least(4) && n >= 6 && 3 * delta >= n + 3) {
    case_tag = 2, k = 3, factor = 3;
  } else if (girth_at_least(5) && n >= 8 && 2 * delta >= n / 2 + 4) {
    case_tag = 3, k = 4, factor = 4;
  } else {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        long long sum = g.degree(u) + g.degree(v);
        ok = g.adjacent(u, v) ? sum >= n : sum >= n + 1;
      }
    if (ok) case_tag = 4, k = 2, factor = 2;
  }
  require(case_tag != 0, errc::no_case_matches, "graph fits none of the family cases");
  ApproxResult out = approx_n_minus_alpha(g, k, budgets);
  out.factor = factor;
  out.case_tag = case_tag;
  return out;
}

// Scaled (k+1)c-approximation: when alpha(G) <= (c-1)n/(kc-1) and
// lambda_{k+1}(G) >= n - alpha_k(G), a (k+1)-hitting-set run divided by
// k+1 approximates the scramble number and gonality within (k+1)c.
inline ApproxResult scaled_kc_approx(const MultiGraph& g, int k, long long c,
                                     const Budgets& budgets = {}) {
  require(k >= 1 && c >= 2, errc::bad_params, "need k >= 1 and c >= 2");
  int n = g.n();
  long long alpha = independence_number(g, budgets.alpha_max_n);
  require(alpha * (k * c - 1) <= (c - 1) * n, errc::precondition_violated,
          "independence number too large: alpha > (c-1)n/(kc-1)");
  long long alpha_k_value = alpha_k(g, k, budgets.alpha_max_n);
  std::optional<long long> lam = lambda_k(g, k + 1, budgets.lambda_k_max_n);
  require(!lam || *lam >= n - alpha_k_value, errc::precondition_violated,
          "lambda_{k+1} below n - alpha_k");
  // sanity chain the guarantee rests on: (1/c)(n - alpha) <= n - alpha_k <= n - alpha
  require(n - alpha <= c * (n - alpha_k_value) && alpha_k_value >= alpha,
          errc::precondition_violated, "approximation chain failed on accepted input");
  ApproxResult out = approx_n_minus_alpha(g, k + 1, budgets);
  out.value = out.value / (k + 1);
  out.factor = static_cast<double>((k + 1) * c);
  out.k = k;
  return out;
}

}  // namespace scramblelab
