#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "xing/graph.hpp"

using namespace xing;

TEST_CASE("graph basics") {
  Graph g;
  g.add_edge(3, 1);
  g.add_edge(1, 2);
  g.add_vertex(9);

  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertices() == std::vector<Vertex>{1, 2, 3, 9});
  CHECK(g.edges()[0] == Edge{1, 2});
  CHECK(g.edges()[1] == Edge{1, 3});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(9) == 0);
  CHECK(g.edge_id(3, 1) == 1);
  CHECK(g.edge_id(2, 3) == -1);
  CHECK(g.neighbors(1) == std::vector<Vertex>{2, 3});
  CHECK(g.fresh_vertex() == 0);

  g.add_vertex(0);
  CHECK(g.fresh_vertex() == 4);

  CHECK_THROWS_AS(g.add_edge(1, 1), error);
  CHECK_THROWS_AS(g.add_edge(1, 2), error);
  CHECK_THROWS_AS(g.remove_edge(2, 3), error);
  CHECK_THROWS_AS(g.add_vertex(-1), error);

  Graph h = g;
  CHECK(h == g);
  h.remove_vertex(1);
  CHECK(h.edge_count() == 0);
  CHECK_FALSE(h.has_vertex(1));
}

TEST_CASE("labels survive copies and compare") {
  Graph g;
  g.add_edge(0, 1);
  g.set_label(0, "hub");
  Graph h = g;
  CHECK(h == g);
  h.set_label(1, "leaf");
  CHECK_FALSE(h == g);
}

TEST_CASE("triangle enumeration") {
  Graph g;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  auto ts = triangles(g);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0] == Triangle{0, 1, 2});
  CHECK(is_triangle_of(g, ts[0]));
  CHECK_FALSE(is_triangle_of(g, make_triangle(2, 3, 4)));
  CHECK_THROWS_AS(make_triangle(1, 1, 2), error);
}

TEST_CASE("invariants: cycles, paths, bipartite") {
  Graph c5;
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  auto inv = invariants(c5);
  CHECK(inv.girth == 5);
  CHECK(inv.degree_sequence == std::vector<int>{2, 2, 2, 2, 2});
  CHECK_FALSE(inv.bipartite);
  CHECK(inv.triangle_list.empty());

  Graph path;
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto pinv = invariants(path);
  CHECK_FALSE(pinv.girth.has_value());
  CHECK(pinv.bipartite);

  Graph c6;
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK(invariants(c6).bipartite);
  CHECK(invariants(c6).girth == 6);
}

TEST_CASE("girth matches exhaustive cycle search on small graphs") {
  using testsupport::for_each_labeled_graph;
  using testsupport::has_cycle_of_length;
  int checked = 0;
  for_each_labeled_graph(5, [&](const Graph& g) {
    if (++checked % 7) return; // sample for speed; still hundreds of graphs
    auto inv = invariants(g);
    int shortest = 0;
    for (int len = 3; len <= 5; ++len)
      if (has_cycle_of_length(g, len)) {
        shortest = len;
        break;
      }
    if (shortest == 0) CHECK_FALSE(inv.girth.has_value());
    else CHECK(inv.girth == shortest);
  });
}

TEST_CASE("components") {
  Graph g;
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_vertex(7);
  CHECK(component_count(g) == 3);
  CHECK_FALSE(is_connected(g));
  g.add_edge(1, 2);
  g.add_edge(3, 7);
  CHECK(is_connected(g));
}
