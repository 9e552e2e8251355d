// Core structure tests: multigraph invariants, cuts and connectivity,
// connected-subset machinery, text round trips, and the small-graph corpus.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "scramblelab/corpus.hpp"
#include "scramblelab/families.hpp"
#include "scramblelab/flow.hpp"
#include "scramblelab/io.hpp"
#include "scramblelab/multigraph.hpp"
#include "scramblelab/subgraphs.hpp"

using namespace scramblelab;

namespace {

// Petersen graph: outer 5-cycle, inner pentagram, spokes.
MultiGraph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5, 1});          // outer cycle
    es.push_back({5 + i, 5 + (i + 2) % 5, 1});  // inner pentagram
    es.push_back({i, 5 + i, 1});                // spoke
  }
  return MultiGraph(10, es);
}

}  // namespace

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(MultiGraph(3, {{0, 0, 1}, {0, 1, 1}, {1, 2, 1}}), error);  // self loop
  CHECK_THROWS_AS(MultiGraph(4, {{0, 1, 1}, {2, 3, 1}}), error);             // disconnected
  CHECK_THROWS_AS(MultiGraph(2, {{0, 5, 1}}), error);                        // bad index
  CHECK_THROWS_AS(MultiGraph(0, {}), error);                                 // empty
  CHECK_THROWS_AS(MultiGraph(2, {{0, 1, 0}}), error);                        // zero multiplicity
  CHECK(MultiGraph().n() == 1);                                              // default = K_1
}

TEST_CASE("degrees and multiplicity on a banana") {
  MultiGraph b = make_banana(3);
  CHECK(b.n() == 2);
  CHECK(b.degree(0) == 3);
  CHECK(b.degree(1) == 3);
  CHECK(b.multiplicity(0, 1) == 3);
  CHECK(b.edge_count() == 3);
  CHECK_FALSE(b.is_simple());
  CHECK(b.adjacent(0, 1));
  CHECK(b.girth() == 2);  // a doubled edge is a 2-cycle
}

TEST_CASE("girth") {
  CHECK(make_cycle(5).girth() == 5);
  CHECK(make_cycle(9).girth() == 9);
  CHECK(make_complete(4).girth() == 3);
  CHECK_FALSE(make_path(6).girth().has_value());
  CHECK(petersen().girth() == 5);
  CHECK(make_grid(3, 4).girth() == 4);
}

TEST_CASE("subdivide and smooth round-trip") {
  MultiGraph c4 = make_cycle(4);
  MultiGraph sub = c4.subdivide_edge(0, 1);
  CHECK(sub.n() == 5);
  CHECK(sub.edge_count() == 5);
  CHECK(sub.degree(4) == 2);  // the new vertex
  CHECK_FALSE(sub.adjacent(0, 1));
  CHECK(is_isomorphic(sub, make_cycle(5)));
  CHECK(sub.smooth_vertex(4) == c4);

  MultiGraph p3 = make_path(3);
  CHECK(p3.smooth_vertex(1) == make_path(2));
}

TEST_CASE("smooth rejects bad vertices") {
  // center of a star has degree 3
  CHECK_THROWS_AS(make_complete_multipartite({1, 3}).smooth_vertex(0), error);
  // both endpoints of a doubled edge have degree 2 but identical neighbors
  CHECK_THROWS_AS(make_multipath(2, 2).smooth_vertex(0), error);
  // leaf of a path has degree 1
  CHECK_THROWS_AS(make_path(4).smooth_vertex(0), error);
}

TEST_CASE("subdivision of parallel edges peels one copy") {
  MultiGraph b = make_banana(2);
  MultiGraph sub = b.subdivide_edge(0, 1);
  CHECK(sub.n() == 3);
  CHECK(sub.multiplicity(0, 1) == 1);  // one copy survives
  CHECK(sub.degree(2) == 2);
  CHECK(is_isomorphic(sub, make_cycle(3)));
}

TEST_CASE("cartesian product structure") {
  CHECK(is_isomorphic(MultiGraph::cartesian_product(make_path(2), make_path(2)),
                      make_cycle(4)));
  CHECK(is_isomorphic(MultiGraph::cartesian_product(make_path(2), make_path(3)),
                      make_grid(2, 3)));

  MultiGraph a = make_path(3), b = make_cycle(3);
  MultiGraph p = MultiGraph::cartesian_product(a, b);
  CHECK(p.n() == 9);
  // degree law: deg(u,v) = deg_a(u) + deg_b(v); product vertex id = u*|b| + v
  for (int u = 0; u < a.n(); ++u)
    for (int v = 0; v < b.n(); ++v)
      CHECK(p.degree(u * b.n() + v) == a.degree(u) + b.degree(v));
}

TEST_CASE("line graph counts and shapes") {
  // |E(L(G))| = sum over vertices of C(deg, 2) for simple G
  for (const MultiGraph& g :
       {make_complete(4), make_cycle(5), make_grid(2, 3), petersen()}) {
    MultiGraph lg = g.line_graph();
    CHECK(lg.n() == g.edge_count());
    long long want = 0;
    for (int v = 0; v < g.n(); ++v)
      want += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1) / 2;
    CHECK(lg.edge_count() == want);
  }
  CHECK(is_isomorphic(make_cycle(6).line_graph(), make_cycle(6)));
  CHECK(is_isomorphic(make_complete(4).line_graph(), make_complete_multipartite({2, 2, 2})));
}

TEST_CASE("connected subset machinery") {
  MultiGraph p4 = make_path(4);
  CHECK(p4.is_connected_subset({0, 1, 2}));
  CHECK_FALSE(p4.is_connected_subset({0, 2}));
  CHECK(p4.is_connected_subset({3}));

  MultiGraph c6 = make_cycle(6);
  CHECK(c6.component_mask(0, mask_t{0b000111}) == mask_t{0b000111});
  CHECK(c6.component_mask(0, mask_t{0b001011}) == mask_t{0b000011});

  auto comps = make_cycle(6).components({0, 1, 3, 4});
  REQUIRE(comps.size() == 2);
  std::set<std::vector<int>> got(comps.begin(), comps.end());
  CHECK(got == std::set<std::vector<int>>{{0, 1}, {3, 4}});
}

TEST_CASE("boundary sizes") {
  MultiGraph c6 = make_cycle(6);
  CHECK(c6.boundary_size(mask_t{0b000111}) == 2);  // an arc of C_6
  CHECK(c6.boundary_size(mask_t{0b010101}) == 6);  // alternating set
  MultiGraph b = make_banana(4);
  CHECK(b.boundary_size(mask_t{0b01}) == 4);  // multiplicity counts
}

TEST_CASE("edge cuts and connectivity") {
  CHECK(edge_connectivity(make_cycle(7)) == 2);
  CHECK(edge_connectivity(make_complete(5)) == 4);
  CHECK(edge_connectivity(make_banana(3)) == 3);
  CHECK(edge_connectivity(make_path(5)) == 1);
  CHECK(edge_connectivity(make_grid(2, 2)) == 2);
  CHECK(edge_connectivity(petersen()) == 3);

  CHECK(vertex_connectivity(make_cycle(4)) == 2);
  CHECK(vertex_connectivity(make_complete(5)) == 4);
  CHECK(vertex_connectivity(make_path(3)) == 1);
  CHECK(vertex_connectivity(petersen()) == 3);
  CHECK(vertex_connectivity(make_complete_multipartite({3, 3})) == 3);

  EdgeCut cut = min_edge_cut(make_path(4), {0}, {3});
  CHECK(cut.value == 1);
  REQUIRE(cut.cut.size() == 1);

  // disjoint edges of K_4: the other four edges cross
  EdgeCut k4 = min_edge_cut(make_complete(4), {0, 1}, {2, 3});
  CHECK(k4.value == 4);
  CHECK(k4.cut.size() == 4);

  CHECK_THROWS_AS(min_edge_cut(make_path(3), {0, 1}, {1, 2}), error);  // overlap
  CHECK_THROWS_AS(min_edge_cut(make_path(3), {}, {2}), error);         // empty side
}

TEST_CASE("min cut value matches a brute-force bipartition scan") {
  // independent oracle: try all bipartitions separating a from b
  auto brute = [](const MultiGraph& g, int a, int b) {
    long long best = -1;
    for (mask_t s = 0; s < (mask_t{1} << g.n()); ++s) {
      if (!(s & (mask_t{1} << a)) || (s & (mask_t{1} << b))) continue;
      long long cross = 0;
      for (const Edge& e : g.edges()) {
        bool eu = (s >> e.u) & 1, ev = (s >> e.v) & 1;
        if (eu != ev) cross += e.mult;
      }
      if (best < 0 || cross < best) best = cross;
    }
    return best;
  };
  for (const MultiGraph& g :
       {make_cycle(6), make_complete(5), make_grid(3, 3), make_multipath(3, 2),
        random_connected_graph(7, 40, 42)}) {
    CHECK(min_edge_cut(g, {0}, {g.n() - 1}).value == brute(g, 0, g.n() - 1));
  }
}

TEST_CASE("enumerate connected subgraphs") {
  auto subs = enumerate_connected_subgraphs(make_cycle(5), 2);
  CHECK(subs.size() == 5);  // the five edges
  subs = enumerate_connected_subgraphs(make_cycle(5), 3);
  CHECK(subs.size() == 5);  // the five arcs
  subs = enumerate_connected_subgraphs(make_complete(4), 2);
  CHECK(subs.size() == 6);
  // every K_5 5-subset of the dense construction is connected
  CHECK(enumerate_connected_subgraphs(make_bipartite_plus_cycle(10), 5).size() == 252);
  // entries are sorted vertex lists that really are connected
  for (const auto& vs : enumerate_connected_subgraphs(make_grid(2, 3), 3)) {
    CHECK(std::is_sorted(vs.begin(), vs.end()));
    CHECK(make_grid(2, 3).is_connected_subset(vs));
  }
}

TEST_CASE("independence numbers") {
  CHECK(independence_number(make_cycle(6)) == 3);
  CHECK(independence_number(make_cycle(7)) == 3);
  CHECK(independence_number(make_complete(4)) == 1);
  CHECK(independence_number(make_complete_multipartite({3, 3})) == 3);
  CHECK(independence_number(petersen()) == 4);
  CHECK(independence_number(make_path(5)) == 3);
}

TEST_CASE("alpha_k component-order independence") {
  // alpha_k = largest vertex set inducing only components of order <= k
  CHECK(alpha_k(make_cycle(6), 1) == 3);
  CHECK(alpha_k(make_cycle(6), 2) == 4);
  CHECK(alpha_k(make_cycle(6), 5) == 5);  // drop one vertex -> path of 5
  CHECK(alpha_k(make_path(4), 2) == 3);   // {0,1,3}: components of order 2 and 1
  CHECK(alpha_k(make_complete(5), 3) == 3);

  // frozen oracle for the dense construction: no 5-subset of K64C avoids
  // inducing a component of order 5 (they are all connected), so alpha_4 = 4
  MultiGraph k64c = make_bipartite_plus_cycle(10);
  CHECK(alpha_k(k64c, 4) == 4);
  // the small side is one side of a complete bipartite graph: independent
  CHECK(independence_number(k64c) == 4);
}

TEST_CASE("alpha_k is monotone in k") {
  for (const MultiGraph& g : {make_cycle(6), make_grid(2, 4), petersen()}) {
    int prev = 0;
    for (int k = 1; k <= g.n(); ++k) {
      int cur = alpha_k(g, k);
      CHECK(cur >= prev);
      prev = cur;
    }
    CHECK(alpha_k(g, g.n()) == g.n());
  }
}

TEST_CASE("lambda_k component-order edge connectivity") {
  // lambda_1 coincides with plain edge connectivity
  for (const MultiGraph& g : {make_cycle(5), make_complete(4), make_grid(2, 3)}) {
    auto l1 = lambda_k(g, 1);
    REQUIRE(l1.has_value());
    CHECK(*l1 == edge_connectivity(g));
  }
  // cutting C_6 into two paths of >= 2 vertices takes 2 edges
  auto l2 = lambda_k(make_cycle(6), 2);
  REQUIRE(l2.has_value());
  CHECK(*l2 == 2);
  // a star cannot be split into parts of order >= 2
  CHECK_FALSE(lambda_k(make_complete_multipartite({1, 4}), 2).has_value());
  // K_4 split into two edges: all 4 crossing edges go
  auto k4 = lambda_k(make_complete(4), 2);
  REQUIRE(k4.has_value());
  CHECK(*k4 == 4);
}

TEST_CASE("xi_k minimum boundary of connected k-sets") {
  CHECK(xi_k(make_cycle(8), 2) == 2);
  CHECK(xi_k(make_cycle(8), 4) == 2);
  // 3-regular Petersen, geodesic 3-path: 3*3 - 2*2 = 5 boundary edges
  CHECK(xi_k(petersen(), 3) == 5);
  CHECK(xi_k(make_complete(5), 2) == 6);  // 2*4 - 2
  CHECK(xi_k(make_path(6), 3) == 1);      // a leaf-end arc has boundary 1
}

TEST_CASE("graph text round trip") {
  for (const MultiGraph& g :
       {make_cycle(5), make_banana(3), make_grid(3, 3), MultiGraph()}) {
    MultiGraph back = read_graph_text(write_graph_text(g));
    CHECK(back == g);
  }
  MultiGraph tagged = make_cycle(4).with_annotation("cycle 4");
  MultiGraph back = read_graph_text(write_graph_text(tagged));
  CHECK(back == tagged);
  REQUIRE(back.annotation().has_value());
  CHECK(*back.annotation() == "cycle 4");

  CHECK_THROWS_AS(read_graph_text(""), error);
  CHECK_THROWS_AS(read_graph_text("nonsense"), error);
  CHECK_THROWS_AS(read_graph_text("n 2\n0 0\n"), error);          // self loop
  CHECK_THROWS_AS(read_graph_text("n 3\n0 1\n"), error);          // disconnected
  CHECK_THROWS_AS(read_graph_text("n 2\n0 1 1 extra\n"), error);  // trailing tokens
}

TEST_CASE("egg list text round trip") {
  std::vector<std::vector<int>> eggs = {{0}, {1, 2}, {0, 2, 3}};
  CHECK(read_eggs_text(write_eggs_text(eggs)) == eggs);
  CHECK_THROWS_AS(read_eggs_text(""), error);
  CHECK_THROWS_AS(read_eggs_text("scramble 2\n0 1\n"), error);  // count mismatch
  CHECK_THROWS_AS(read_eggs_text("eggs 1\n0\n"), error);        // bad header
}

TEST_CASE("graph file io") {
  std::string path = "/tmp/scrl_io_test_graph.txt";
  MultiGraph g = make_grid(2, 3).with_annotation("grid 2 3");
  save_graph(path, g);
  MultiGraph back = load_graph(path);
  CHECK(back == g);
  CHECK(back.annotation() == g.annotation());
  CHECK_THROWS_AS(load_graph("/tmp/definitely_missing_scrl_file.txt"), error);
}

TEST_CASE("connected graph census counts") {
  const long long want[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    auto all = all_connected_graphs(n);
    CHECK(static_cast<long long>(all.size()) == want[n - 1]);
    for (const MultiGraph& g : all) {
      CHECK(g.n() == n);
      CHECK(g.is_simple());
    }
  }
  CHECK_THROWS_AS(all_connected_graphs(7), error);
  CHECK_THROWS_AS(all_connected_graphs(0), error);
}

TEST_CASE("census entries are pairwise non-isomorphic") {
  for (int n = 2; n <= 5; ++n) {
    auto all = all_connected_graphs(n);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        CHECK_FALSE(is_isomorphic(all[i], all[j]));
  }
}

TEST_CASE("random generators are deterministic and valid") {
  MultiGraph a = random_connected_graph(8, 35, 7);
  MultiGraph b = random_connected_graph(8, 35, 7);
  CHECK(a == b);
  CHECK(a.n() == 8);
  CHECK(a.is_simple());
  CHECK(random_connected_graph(8, 35, 8).edges() != a.edges());

  MultiGraph t = random_tree(9, 3);
  CHECK(t.n() == 9);
  CHECK(t.edge_count() == 8);  // tree

  MultiGraph g = make_grid(3, 3);
  MultiGraph sub = random_spanning_connected_subgraph(g, 5);
  CHECK(sub.n() == g.n());
  CHECK(sub.edge_count() <= g.edge_count());
  for (const Edge& e : sub.edges()) CHECK(g.multiplicity(e.u, e.v) >= e.mult);
  CHECK(sub == random_spanning_connected_subgraph(g, 5));
}

TEST_CASE("isomorphism spot checks") {
  CHECK(is_isomorphic(make_cycle(4), make_complete_multipartite({2, 2})));
  CHECK(is_isomorphic(make_complete(3), make_cycle(3)));
  CHECK_FALSE(is_isomorphic(make_path(4), make_complete_multipartite({1, 3})));
  CHECK_FALSE(is_isomorphic(make_cycle(6), make_complete_multipartite({3, 3})));
  CHECK(is_isomorphic(make_grid(2, 2), make_cycle(4)));
  CHECK_THROWS_AS(is_isomorphic(make_cycle(9), make_cycle(9)), error);  // over cap
}
