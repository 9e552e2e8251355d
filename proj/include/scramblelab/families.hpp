#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "scramblelab/multigraph.hpp"

namespace scramblelab {

// A parameterized generator, e.g. {"cycle", {6}} or {"multipartite", {2,2,2}}.
// format_family_tag round-trips through graph-file annotations.
struct FamilySpec {
  std::string name;
  std::vector<int> params;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string format_family_tag(const FamilySpec& f) {
  std::ostringstream os;
  os << f.name;
  for (int p : f.params) os << ' ' << p;
  return os.str();
}

inline FamilySpec parse_family_tag(const std::string& tag) {
  std::istringstream is(tag);
  FamilySpec f;
  require(static_cast<bool>(is >> f.name), errc::parse_error, "empty family tag");
  int p;
  while (is >> p) f.params.push_back(p);
  require(is.eof(), errc::parse_error, "malformed family tag: " + tag);
  return f;
}

inline MultiGraph make_path(int n) {
  require(n >= 1, errc::bad_params, "path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
  return MultiGraph(n, es);
}

inline MultiGraph make_cycle(int n) {
  require(n >= 3, errc::bad_params, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
  es.push_back({0, n - 1, 1});
  return MultiGraph(n, es);
}

inline MultiGraph make_complete(int n) {
  require(n >= 1, errc::bad_params, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j, 1});
  return MultiGraph(n, es);
}

// parts occupy consecutive index ranges in the given order
inline MultiGraph make_complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), errc::bad_params, "multipartite graph needs parts");
  for (int p : parts) require(p >= 1, errc::bad_params, "part sizes must be >= 1");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of(n);
  int at = 0, pi = 0;
  for (int p : parts) {
    for (int i = 0; i < p; ++i) part_of[at++] = pi;
    ++pi;
  }
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) es.push_back({i, j, 1});
  return MultiGraph(n, es);
}

// m x n grid, vertex (r,c) -> r*n + c
inline MultiGraph make_grid(int m, int n) {
  require(m >= 1 && n >= 1, errc::bad_params, "grid needs positive dimensions");
  return MultiGraph::cartesian_product(make_path(m), make_path(n));
}

// C_m x P_n cylinder, vertex (i,j) -> i*n + j with i the cycle coordinate
inline MultiGraph make_cylinder(int m, int n) {
  require(m >= 3 && n >= 1, errc::bad_params, "cylinder needs m >= 3, n >= 1");
  return MultiGraph::cartesian_product(make_cycle(m), make_path(n));
}

// K_a x K_b rook's graph, vertex (i,j) -> i*b + j
inline MultiGraph make_rook(int a, int b) {
  require(a >= 1 && b >= 1, errc::bad_params, "rook graph needs positive dimensions");
  return MultiGraph::cartesian_product(make_complete(a), make_complete(b));
}

// Complete bipartite graph with a cycle added on the larger side.
// n = 2m -> K_{m+1,m-1}; n = 2m+1 -> K_{m+1,m}. Larger side = vertices
// 0..m with cycle edges (i, i+1 mod m+1); smaller side follows.
inline MultiGraph make_bipartite_plus_cycle(int n) {
  require(n >= 4, errc::bad_params, "bipartite-plus-cycle needs n >= 4");
  int m = n / 2;
  int big = m + 1, small = n - big;
  std::vector<Edge> es;
  for (int i = 0; i < big; ++i)
    for (int j = 0; j < small; ++j) es.push_back({i, big + j, 1});
  for (int i = 0; i < big; ++i) {
    int j = (i + 1) % big;
    es.push_back({std::min(i, j), std::max(i, j), 1});
  }
  return MultiGraph(n, es);
}

// 4k vertices, i adjacent to j iff |i-j| <= k; treewidth k band graph
inline MultiGraph make_band(int k) {
  require(k >= 1, errc::bad_params, "band graph needs k >= 1");
  int n = 4 * k;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= std::min(n - 1, i + k); ++j) es.push_back({i, j, 1});
  return MultiGraph(n, es);
}

// path on n vertices with every edge repeated t times
inline MultiGraph make_multipath(int n, int t) {
  require(n >= 1 && t >= 1, errc::bad_params, "multipath needs n >= 1, t >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, t});
  return MultiGraph(n, es);
}

// two vertices joined by t parallel edges
inline MultiGraph make_banana(int t) {
  require(t >= 1, errc::bad_params, "banana needs t >= 1");
  return MultiGraph(2, {{0, 1, t}});
}

inline MultiGraph generate_family(const FamilySpec& f) {
  auto need = [&](size_t k) {
    require(f.params.size() == k, errc::bad_params,
            "family '" + f.name + "' takes " + std::to_string(k) + " parameter(s)");
  };
  MultiGraph g;
  if (f.name == "path") {
    need(1);
    g = make_path(f.params[0]);
  } else if (f.name == "cycle") {
    need(1);
    g = make_cycle(f.params[0]);
  } else if (f.name == "complete") {
    need(1);
    g = make_complete(f.params[0]);
  } else if (f.name == "multipartite") {
    require(f.params.size() >= 1, errc::bad_params, "multipartite needs part sizes");
    g = make_complete_multipartite(f.params);
  } else if (f.name == "grid") {
    need(2);
    g = make_grid(f.params[0], f.params[1]);
  } else if (f.name == "cylinder") {
    need(2);
    g = make_cylinder(f.params[0], f.params[1]);
  } else if (f.name == "rook") {
    need(2);
    g = make_rook(f.params[0], f.params[1]);
  } else if (f.name == "bipartite_plus_cycle") {
    need(1);
    g = make_bipartite_plus_cycle(f.params[0]);
  } else if (f.name == "band") {
    need(1);
    g = make_band(f.params[0]);
  } else if (f.name == "multipath") {
    need(2);
    g = make_multipath(f.params[0], f.params[1]);
  } else if (f.name == "banana") {
    need(1);
    g = make_banana(f.params[0]);
  } else {
    fail(errc::bad_params, "unknown family: " + f.name);
  }
  return g.with_annotation(format_family_tag(f));
}

// Checks a graph-file annotation against the graph it annotates: the tag is
// trusted only if regenerating the family reproduces the exact edge list.
inline std::optional<FamilySpec> verified_family(const MultiGraph& g) {
  if (!g.annotation()) return std::nullopt;
  try {
    FamilySpec f = parse_family_tag(*g.annotation());
    if (generate_family(f) == g) return f;
  } catch (const error&) {
  }
  return std::nullopt;
}

}  // namespace scramblelab
