// Treewidth and tree-cut width: exact solvers against hand-certified bounds.
// The grid lower bound comes from an explicit bramble (pairwise-touching
// connected sets whose hitting number is checked independently).

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "scramblelab/corpus.hpp"
#include "scramblelab/families.hpp"
#include "scramblelab/hitting.hpp"
#include "scramblelab/treecut.hpp"
#include "scramblelab/treewidth.hpp"

using namespace scramblelab;

TEST_CASE("treewidth of basic families") {
  CHECK(treewidth_exact(make_path(6)).width == 1);
  CHECK(treewidth_exact(random_tree(9, 21)).width == 1);
  CHECK(treewidth_exact(make_cycle(5)).width == 2);
  CHECK(treewidth_exact(make_cycle(8)).width == 2);
  for (int n = 2; n <= 6; ++n) CHECK(treewidth_exact(make_complete(n)).width == n - 1);
  CHECK(treewidth_exact(make_complete_multipartite({3, 3})).width == 3);
  CHECK(treewidth_exact(MultiGraph()).width == 0);
  CHECK(treewidth_exact(make_band(2)).width == 2);
  CHECK(treewidth_exact(make_band(3)).width == 3);
  // multiplicities are irrelevant
  CHECK(treewidth_exact(make_multipath(4, 3)).width == 1);
  CHECK(treewidth_exact(make_banana(5)).width == 1);
}

TEST_CASE("grid treewidth certified from both sides") {
  MultiGraph g = make_grid(3, 4);
  auto id = [](int r, int c) { return r * 4 + c; };

  // Lower bound: a bramble of order 4. Crosses over the top-left 2x3 block,
  // plus the bottom row (first three columns), plus the right column.
  std::vector<std::vector<int>> bramble;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<int> cross;
      for (int c = 0; c < 3; ++c) cross.push_back(id(i, c));
      for (int r = 0; r < 2; ++r)
        if (std::find(cross.begin(), cross.end(), id(r, j)) == cross.end())
          cross.push_back(id(r, j));
      bramble.push_back(cross);
    }
  bramble.push_back({id(2, 0), id(2, 1), id(2, 2)});
  bramble.push_back({id(0, 3), id(1, 3), id(2, 3)});

  std::vector<mask_t> masks;
  for (const auto& set : bramble) {
    CHECK(g.is_connected_subset(set));
    masks.push_back(vertices_to_mask(set));
  }
  // pairwise touching: intersect or joined by an edge
  for (size_t a = 0; a < bramble.size(); ++a)
    for (size_t b = a + 1; b < bramble.size(); ++b) {
      bool touch = (masks[a] & masks[b]) != 0;
      for (int u : bramble[a])
        if (!touch) touch = (g.adjacency_mask(u) & masks[b]) != 0;
      CHECK(touch);
    }
  CHECK(exact_min_hitting_set(masks).value == 4);  // bramble order 4 => tw >= 3

  // Upper bound: column-major elimination has back-degree <= 3.
  std::vector<int> order;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 3; ++r) order.push_back(id(r, c));
  CHECK(elimination_order_width(g, order) == 3);

  CHECK(treewidth_exact(g).width == 3);
}

TEST_CASE("treewidth witness re-verifies") {
  for (int n = 2; n <= 5; ++n)
    for (const MultiGraph& g : all_connected_graphs(n)) {
      TreewidthResult r = treewidth_exact(g);
      CHECK(static_cast<int>(r.elimination_order.size()) == g.n());
      CHECK(elimination_order_width(g, r.elimination_order) == r.width);
    }
  for (const MultiGraph& g : {make_grid(3, 4), make_band(3), make_cylinder(5, 2)}) {
    TreewidthResult r = treewidth_exact(g);
    CHECK(elimination_order_width(g, r.elimination_order) == r.width);
  }
}

TEST_CASE("elimination order validation") {
  MultiGraph g = make_cycle(4);
  CHECK_THROWS_AS(elimination_order_width(g, {0, 1, 2}), error);     // too short
  CHECK_THROWS_AS(elimination_order_width(g, {0, 1, 2, 2}), error);  // repeat
  CHECK_THROWS_AS(elimination_order_width(g, {0, 1, 2, 9}), error);  // bad vertex
  // a deliberately bad order still yields a valid upper bound
  std::vector<int> order = {0, 2, 1, 3};
  CHECK(elimination_order_width(g, order) >= treewidth_exact(g).width);
}

TEST_CASE("treewidth respects the size cap") {
  Budgets tight;
  tight.tw_max_n = 5;
  CHECK_THROWS_AS(treewidth_exact(make_cycle(6), tight), error);
  CHECK(treewidth_exact(make_cycle(5), tight).width == 2);
}

TEST_CASE("tree-cut decomposition validation") {
  MultiGraph c4 = make_cycle(4);
  // the one-node decomposition always validates
  TreeCutDecomposition solo;
  solo.nodes = 1;
  solo.bags = {{0, 1, 2, 3}};
  check_tree_cut(c4, solo);
  CHECK(tcd_width(c4, solo).width == 4);

  TreeCutDecomposition bad = solo;
  bad.bags = {{0, 1, 2}};  // vertex 3 unplaced
  CHECK_THROWS_AS(check_tree_cut(c4, bad), error);

  TreeCutDecomposition dup;
  dup.nodes = 2;
  dup.links = {{0, 1}};
  dup.bags = {{0, 1, 2}, {2, 3}};  // vertex 2 owned twice
  CHECK_THROWS_AS(check_tree_cut(c4, dup), error);

  TreeCutDecomposition loop;
  loop.nodes = 2;
  loop.links = {{0, 1}, {1, 0}};  // not a tree
  loop.bags = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(check_tree_cut(c4, loop), error);

  TreeCutDecomposition forest;
  forest.nodes = 3;
  forest.links = {{0, 1}};  // disconnected tree
  forest.bags = {{0, 1}, {2, 3}, {}};
  CHECK_THROWS_AS(check_tree_cut(c4, forest), error);
}

TEST_CASE("star decomposition width on the four-cycle") {
  // center empty, one leaf per vertex: every C_4 edge tunnels past the center
  MultiGraph c4 = make_cycle(4);
  TreeCutDecomposition star;
  star.nodes = 5;
  star.links = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  star.bags = {{}, {0}, {1}, {2}, {3}};
  TcdWidthReport rep = tcd_width(c4, star);
  CHECK(rep.link_width == 2);  // each leaf adhesion = vertex degree
  CHECK(rep.node_width == 4);  // center: all four edges tunnel
  CHECK(rep.width == 4);
  REQUIRE(rep.link_values.size() == 4);
  for (long long v : rep.link_values) CHECK(v == 2);
  REQUIRE(rep.node_values.size() == 5);
  CHECK(rep.node_values[0] == 4);
  for (int leaf = 1; leaf <= 4; ++leaf) CHECK(rep.node_values[leaf] == 1);
}

TEST_CASE("path decomposition width on a path graph") {
  // singleton bags along a path: adhesion 1 per link, inner nodes tunnel nothing
  MultiGraph p4 = make_path(4);
  TreeCutDecomposition line;
  line.nodes = 4;
  line.links = {{0, 1}, {1, 2}, {2, 3}};
  line.bags = {{0}, {1}, {2}, {3}};
  TcdWidthReport rep = tcd_width(p4, line);
  CHECK(rep.link_width == 1);
  CHECK(rep.node_width == 1);
  CHECK(rep.width == 1);
}

TEST_CASE("screewidth of the closed-form families") {
  CHECK(screewidth_exact(make_path(5)).width == 1);
  CHECK(screewidth_exact(random_tree(8, 55)).width == 1);
  CHECK(screewidth_exact(MultiGraph()).width == 1);
  CHECK(screewidth_exact(make_cycle(4)).width == 2);
  CHECK(screewidth_exact(make_cycle(7)).width == 2);
  CHECK(screewidth_exact(make_grid(2, 5)).width == 2);
  CHECK(screewidth_exact(make_grid(3, 3)).width == 3);
  CHECK(screewidth_exact(make_complete_multipartite({2, 2, 2})).width == 4);
  CHECK(screewidth_exact(make_cylinder(4, 2)).width == 4);
  CHECK(screewidth_exact(make_banana(3)).width == 2);
}

TEST_CASE("screewidth witness re-verifies") {
  for (const MultiGraph& g :
       {make_cycle(5), make_grid(2, 4), make_complete(4), make_path(6),
        random_connected_graph(7, 30, 31), make_multipath(3, 2)}) {
    ScreewidthResult r = screewidth_exact(g);
    check_tree_cut(g, r.witness);
    CHECK(tcd_width(g, r.witness).width == r.width);
  }
}

TEST_CASE("screewidth respects the size cap") {
  Budgets tight;
  tight.scw_max_n = 5;
  CHECK_THROWS_AS(screewidth_exact(make_cycle(6), tight), error);
  CHECK(screewidth_exact(make_cycle(5), tight).width == 2);
}

TEST_CASE("screewidth never exceeds any valid decomposition's width") {
  // the solver's value is a min: one-node and star decompositions bound it
  for (const MultiGraph& g : {make_cycle(6), make_grid(2, 3), make_complete(4)}) {
    long long scw = screewidth_exact(g).width;
    TreeCutDecomposition solo;
    solo.nodes = 1;
    solo.bags.assign(1, {});
    solo.bags[0].resize(g.n());
    std::iota(solo.bags[0].begin(), solo.bags[0].end(), 0);
    CHECK(scw <= tcd_width(g, solo).width);

    TreeCutDecomposition star;
    star.nodes = g.n() + 1;
    star.bags.assign(g.n() + 1, {});
    for (int v = 0; v < g.n(); ++v) {
      star.links.push_back({0, v + 1});
      star.bags[v + 1] = {v};
    }
    CHECK(scw <= tcd_width(g, star).width);
  }
}
