#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "xing/generators.hpp"
#include "xing/isomorphism.hpp"
#include "xing/moves.hpp"

using namespace xing;

TEST_CASE("canonical form equality on relabelings") {
  Graph g;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  Graph h;
  h.add_edge(10, 20);
  h.add_edge(20, 4);
  h.add_edge(4, 10);
  CHECK(canonical_form(g) == canonical_form(h));
  CHECK(is_isomorphic(g, h));
}

TEST_CASE("star of K4 triangle is K_{2,3}, against a brute-force oracle") {
  auto [g, step] = delta_y(complete(4), make_triangle(0, 1, 2));
  Graph k23 = complete_bipartite(2, 3);
  CHECK(testsupport::brute_isomorphic(g, k23));
  CHECK(is_isomorphic(g, k23));
}

TEST_CASE("same degree sequence, different graphs") {
  Graph c6 = cycle(6);
  Graph two_triangles;
  for (int b : {0, 3})
    for (int i = 0; i < 3; ++i)
      two_triangles.add_edge(b + i, b + (i + 1) % 3);
  CHECK_FALSE(is_isomorphic(c6, two_triangles));
}

TEST_CASE("canonical form is relabeling-invariant on random graphs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng() % 8); // up to 9 vertices
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge(i, j);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    for (int i = 0; i < n; ++i) h.add_vertex(perm[i]);
    for (const Edge& e : g.edges()) h.add_edge(perm[g.index_of(e.u)], perm[g.index_of(e.v)]);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("agreement with brute-force isomorphism on all 4-vertex pairs") {
  std::vector<Graph> graphs;
  testsupport::for_each_labeled_graph(4, [&](const Graph& g) { graphs.push_back(g); });
  for (size_t i = 0; i < graphs.size(); i += 5)
    for (size_t j = i; j < graphs.size(); j += 7) {
      bool brute = testsupport::brute_isomorphic(graphs[i], graphs[j]);
      CHECK(is_isomorphic(graphs[i], graphs[j]) == brute);
    }
}

TEST_CASE("highly symmetric graphs stay cheap") {
  CHECK(canonical_form(complete(16)) == canonical_form(complete(16)));
  CHECK(is_isomorphic(complete_bipartite(8, 8), complete_bipartite(8, 8)));
  CHECK(is_isomorphic(heawood(), heawood()));
  CHECK(is_isomorphic(petersen(), petersen()));
}

TEST_CASE("connected graph counts on five vertices") {
  // 21 connected simple graphs on 5 vertices up to isomorphism.
  std::set<std::string> forms;
  testsupport::for_each_labeled_graph(5, [&](const Graph& g) {
    if (is_connected(g)) forms.insert(canonical_form(g));
  });
  CHECK(forms.size() == 21);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(canonical_form(complete(17)), error);
  CHECK_NOTHROW(canonical_form(complete(17), 17));
}
