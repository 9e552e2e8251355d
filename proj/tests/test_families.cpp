// Family generators: vertex/edge counts, degree structure, tag round trips,
// and the annotation verifier.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "scramblelab/corpus.hpp"
#include "scramblelab/families.hpp"

using namespace scramblelab;

TEST_CASE("path, cycle, complete counts") {
  for (int n = 1; n <= 8; ++n) {
    MultiGraph p = make_path(n);
    CHECK(p.n() == n);
    CHECK(p.edge_count() == n - 1);
  }
  for (int n = 3; n <= 8; ++n) {
    MultiGraph c = make_cycle(n);
    CHECK(c.n() == n);
    CHECK(c.edge_count() == n);
    CHECK(c.min_degree() == 2);
    CHECK(c.max_degree() == 2);
  }
  for (int n = 2; n <= 7; ++n) {
    MultiGraph k = make_complete(n);
    CHECK(k.n() == n);
    CHECK(k.edge_count() == static_cast<long long>(n) * (n - 1) / 2);
    CHECK(k.min_degree() == n - 1);
  }
  CHECK_THROWS_AS(make_path(0), error);
  CHECK_THROWS_AS(make_cycle(2), error);
  CHECK_THROWS_AS(make_complete(0), error);
}

TEST_CASE("complete multipartite counts") {
  // |E| = sum over part pairs of n_i * n_j
  MultiGraph k23 = make_complete_multipartite({2, 3});
  CHECK(k23.n() == 5);
  CHECK(k23.edge_count() == 6);
  MultiGraph k222 = make_complete_multipartite({2, 2, 2});
  CHECK(k222.n() == 6);
  CHECK(k222.edge_count() == 12);
  CHECK(k222.min_degree() == 4);
  CHECK(k222.max_degree() == 4);
  MultiGraph k1113 = make_complete_multipartite({1, 1, 1, 3});
  CHECK(k1113.n() == 6);
  CHECK(k1113.edge_count() == 3 + 3 + 3 + 3);
  // one part only would be edgeless; reject
  CHECK_THROWS_AS(make_complete_multipartite({4}), error);
  CHECK_THROWS_AS(make_complete_multipartite({}), error);
  CHECK_THROWS_AS(make_complete_multipartite({2, 0}), error);
  // a star is multipartite {1, m}
  MultiGraph star = make_complete_multipartite({1, 4});
  CHECK(star.n() == 5);
  CHECK(star.edge_count() == 4);
  CHECK(star.max_degree() == 4);
}

TEST_CASE("grid, cylinder, rook counts") {
  MultiGraph g = make_grid(3, 4);
  CHECK(g.n() == 12);
  CHECK(g.edge_count() == 3 * 3 + 4 * 2);  // m(n-1) + n(m-1)
  CHECK(g.max_degree() == 4);
  CHECK(g.min_degree() == 2);

  MultiGraph y = make_cylinder(4, 2);
  CHECK(y.n() == 8);
  CHECK(y.edge_count() == 4 * 1 + 2 * 4);  // m(n-1) + n*m
  CHECK(y.min_degree() == 3);
  CHECK(y.max_degree() == 3);

  MultiGraph r = make_rook(4, 4);
  CHECK(r.n() == 16);
  CHECK(r.min_degree() == 6);
  CHECK(r.max_degree() == 6);
  CHECK(r.edge_count() == 48);
  // rook adjacency: same row or same column
  CHECK(r.adjacent(0 * 4 + 1, 0 * 4 + 3));
  CHECK(r.adjacent(1 * 4 + 2, 3 * 4 + 2));
  CHECK_FALSE(r.adjacent(0 * 4 + 0, 1 * 4 + 1));
}

TEST_CASE("dense bipartite-plus-cycle construction") {
  MultiGraph g = make_bipartite_plus_cycle(10);
  CHECK(g.n() == 10);
  CHECK(g.edge_count() == 30);  // 6*4 bipartite + 6 cycle
  CHECK(g.min_degree() == 6);
  CHECK(g.max_degree() == 6);
  // big side carries the cycle
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(5, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  // cross edges all present
  for (int i = 0; i < 6; ++i)
    for (int j = 6; j < 10; ++j) CHECK(g.adjacent(i, j));

  MultiGraph odd = make_bipartite_plus_cycle(9);  // K_{5,4} plus C_5
  CHECK(odd.n() == 9);
  CHECK(odd.edge_count() == 20 + 5);
  CHECK_THROWS_AS(make_bipartite_plus_cycle(3), error);
}

TEST_CASE("band graph structure") {
  MultiGraph b = make_band(3);
  CHECK(b.n() == 12);
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      CHECK(b.adjacent(i, j) == (j - i <= 3));
  // interior degree 2k, ends taper
  CHECK(b.degree(0) == 3);
  CHECK(b.degree(5) == 6);
  CHECK(b.max_degree() == 6);
  MultiGraph b1 = make_band(1);  // plain path on 4 vertices
  CHECK(b1 == make_path(4));
}

TEST_CASE("multigraph families") {
  MultiGraph mp = make_multipath(4, 3);
  CHECK(mp.n() == 4);
  CHECK(mp.edge_count() == 9);
  CHECK(mp.multiplicity(1, 2) == 3);
  CHECK(make_banana(5).multiplicity(0, 1) == 5);
  CHECK_THROWS_AS(make_banana(0), error);
}

TEST_CASE("family tag round trip") {
  std::vector<FamilySpec> specs = {
      {"cycle", {6}},     {"multipartite", {2, 2, 2}}, {"grid", {3, 4}},
      {"cylinder", {6, 2}}, {"banana", {3}},           {"bipartite_plus_cycle", {10}},
  };
  for (const FamilySpec& f : specs) {
    CHECK(parse_family_tag(format_family_tag(f)) == f);
    MultiGraph g = generate_family(f);
    REQUIRE(g.annotation().has_value());
    CHECK(*g.annotation() == format_family_tag(f));
    auto back = verified_family(g);
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
}

TEST_CASE("generate_family matches direct constructors") {
  CHECK(generate_family({"path", {5}}) == make_path(5));
  CHECK(generate_family({"complete", {4}}) == make_complete(4));
  CHECK(generate_family({"rook", {3, 3}}) == make_rook(3, 3));
  CHECK(generate_family({"band", {2}}) == make_band(2));
  CHECK_THROWS_AS(generate_family({"moebius", {5}}), error);
  CHECK_THROWS_AS(generate_family({"grid", {3}}), error);  // arity
}

TEST_CASE("verified_family rejects a stale tag") {
  MultiGraph g = generate_family({"cycle", {5}});
  // attach the old tag to a mutated graph: must not verify
  MultiGraph mutated = g.subdivide_edge(0, 1).with_annotation(*g.annotation());
  CHECK_FALSE(verified_family(mutated).has_value());
  // untagged graphs verify to nothing
  CHECK_FALSE(verified_family(make_cycle(5)).has_value());
}

TEST_CASE("products agree with hand-rolled shapes") {
  CHECK(is_isomorphic(make_cylinder(3, 1), make_cycle(3)));
  CHECK(is_isomorphic(make_cylinder(4, 2), MultiGraph::cartesian_product(
                                               make_cycle(4), make_path(2))));
  CHECK(is_isomorphic(make_rook(2, 2), make_cycle(4)));
  CHECK(is_isomorphic(make_grid(1, 5), make_path(5)));
}

TEST_CASE("random set systems") {
  auto sys = random_set_system(8, 3, 12, 99);
  CHECK(sys.size() == 12);
  for (const auto& s : sys) {
    CHECK(!s.empty());
    CHECK(s.size() <= 3);
    for (int v : s) {
      CHECK(v >= 0);
      CHECK(v < 8);
    }
  }
  CHECK(random_set_system(8, 3, 12, 99) == sys);   // deterministic
  CHECK(random_set_system(8, 3, 12, 100) != sys);  // seed matters
}
