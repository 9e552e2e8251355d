#pragma once

#include <algorithm>
#include <vector>

#include "scramblelab/budgets.hpp"
#include "scramblelab/multigraph.hpp"

namespace scramblelab {

using Divisor = std::vector<long long>;  // chips per vertex

inline long long divisor_degree(const Divisor& d) {
  long long s = 0;
  for (long long c : d) s += c;
  return s;
}

inline void check_divisor(const MultiGraph& g, const Divisor& d) {
  require(static_cast<int>(d.size()) == g.n(), errc::bad_params,
          "divisor length must match vertex count");
}

// Fires every vertex of A simultaneously: each v in A sends one chip along
// every edge copy leaving A. Degree is conserved.
inline Divisor fire_set(const MultiGraph& g, const Divisor& d, const std::vector<int>& a) {
  check_divisor(g, d);
  require(!a.empty(), errc::bad_set, "cannot fire an empty set");
  std::vector<char> in(g.n(), 0);
  for (int v : a) {
    g.check_vertex(v);
    in[v] = 1;
  }
  Divisor out = d;
  for (const Edge& e : g.edges()) {
    if (in[e.u] == in[e.v]) continue;
    int from = in[e.u] ? e.u : e.v;
    int to = in[e.u] ? e.v : e.u;
    out[from] -= e.mult;
    out[to] += e.mult;
  }
  return out;
}

// Dhar's burning algorithm from source q: q burns, and a vertex burns once
// the edges it has into burnt territory exceed its chips. Returns the sorted
// unburnt set (empty iff d is q-reduced on the debt-free side).
inline std::vector<int> dhar_burn(const MultiGraph& g, const Divisor& d, int q) {
  check_divisor(g, d);
  g.check_vertex(q);
  for (int v = 0; v < g.n(); ++v)
    require(v == q || d[v] >= 0, errc::negative_outside_source,
            "burning needs chips >= 0 away from the source");
  std::vector<char> burnt(g.n(), 0);
  burnt[q] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n(); ++v) {
      if (burnt[v]) continue;
      long long heat = 0;
      for (const auto& [w, m] : g.neighbors(v))
        if (burnt[w]) heat += m;
      if (heat > d[v]) {
        burnt[v] = 1;
        changed = true;
      }
    }
  }
  std::vector<int> unburnt;
  for (int v = 0; v < g.n(); ++v)
    if (!burnt[v]) unburnt.push_back(v);
  return unburnt;
}

// The unique q-reduced divisor equivalent to d. Stage 1 clears debt outside q
// by bulk-firing BFS balls around q from the outermost layer inward (layer i
// is only touched by the ball of radius i, so one pass suffices). Stage 2 is
// the standard Dhar loop: fire the unburnt set until everything burns.
inline Divisor q_reduce(const MultiGraph& g, const Divisor& d_in, int q) {
  check_divisor(g, d_in);
  g.check_vertex(q);
  Divisor d = d_in;
  // BFS layers from q
  std::vector<int> layer(g.n(), -1);
  layer[q] = 0;
  std::vector<int> queue{q};
  int t = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (const auto& [w, m] : g.neighbors(x)) {
      (void)m;
      if (layer[w] < 0) {
        layer[w] = layer[x] + 1;
        t = std::max(t, layer[w]);
        queue.push_back(w);
      }
    }
  }
  for (int i = t; i >= 1; --i) {
    long long times = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (layer[v] != i || d[v] >= 0) continue;
      long long c = 0;  // chips v gains per firing of the radius-(i-1) ball
      for (const auto& [w, m] : g.neighbors(v))
        if (layer[w] == i - 1) c += m;
      times = std::max(times, (-d[v] + c - 1) / c);
    }
    if (times == 0) continue;
    for (const Edge& e : g.edges()) {
      int lu = layer[e.u], lv = layer[e.v];
      if (lu == i - 1 && lv == i) {
        d[e.u] -= times * e.mult;
        d[e.v] += times * e.mult;
      } else if (lv == i - 1 && lu == i) {
        d[e.v] -= times * e.mult;
        d[e.u] += times * e.mult;
      }
    }
  }
  // Dhar loop
  for (long long guard = 0;; ++guard) {
    require(guard < 10'000'000, errc::feasibility_cap_exceeded,
            "q-reduction failed to stabilize (internal guard)");
    std::vector<int> unburnt = dhar_burn(g, d, q);
    if (unburnt.empty()) return d;
    d = fire_set(g, d, unburnt);
  }
}

// rank(D) >= 1 iff for every vertex v the v-reduced form puts a chip on v.
inline bool has_positive_rank(const MultiGraph& g, const Divisor& d) {
  check_divisor(g, d);
  if (divisor_degree(d) < 0) return false;
  for (int v = 0; v < g.n(); ++v)
    if (q_reduce(g, d, v)[v] < 1) return false;
  return true;
}

struct GonalityResult {
  int gonality = 0;
  Divisor witness;
};

namespace detail {
inline long long multiset_count(int n, int d) {
  // C(n+d-1, d), saturating at a large sentinel
  long long r = 1;
  for (int i = 1; i <= d; ++i) {
    r = r * (n + i - 1) / i;
    if (r > (1LL << 40)) return 1LL << 40;
  }
  return r;
}

// nondecreasing d-tuples over 0..n-1 in colex order (last coordinate varies
// slowest); emits chip vectors
template <typename Fn>
bool colex_multisets(int n, int d, Fn&& fn) {
  std::vector<int> tuple(d);
  auto rec = [&](auto&& self, int pos, int limit) -> bool {
    if (pos < 0) {
      Divisor div(n, 0);
      for (int v : tuple) ++div[v];
      return fn(div);
    }
    for (int v = 0; v <= limit; ++v) {
      tuple[pos] = v;
      if (self(self, pos - 1, v)) return true;
    }
    return false;
  };
  return rec(rec, d - 1, n - 1);
}
}  // namespace detail

// Least degree of an effective divisor with positive rank. Enumerates
// effective divisors degree by degree in colex order (reproducible witness).
// `cap` = -1 means cap at n (the all-ones divisor always has positive rank).
inline GonalityResult gonality_exact(const MultiGraph& g, int cap = -1,
                                     const Budgets& budgets = {}) {
  if (cap < 0) cap = g.n();
  require(cap >= 1, errc::bad_params, "gonality cap must be >= 1");
  for (int d = 1; d <= cap; ++d) {
    require(detail::multiset_count(g.n(), d) <= budgets.gon_divisor_cap,
            errc::feasibility_cap_exceeded, "gonality enumeration exceeds divisor cap");
    GonalityResult out;
    bool found = detail::colex_multisets(g.n(), d, [&](const Divisor& div) {
      budgets.check_deadline("gonality");
      if (has_positive_rank(g, div)) {
        out.gonality = d;
        out.witness = div;
        return true;
      }
      return false;
    });
    if (found) return out;
  }
  fail(errc::cap_exceeded, "no positive-rank divisor up to degree " + std::to_string(cap));
}

}  // namespace scramblelab
