#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "xing/generators.hpp"
#include "xing/isomorphism.hpp"
#include "xing/trigon.hpp"

using namespace xing;
using testsupport::d5;
using testsupport::k4_planar;

TEST_CASE("trigon enumeration follows the base graph") {
  CHECK(trigons(k4_planar()).size() == 4);
  CHECK(trigons(convex_drawing(complete(6))).size() == 20);
  CHECK(trigons(convex_drawing(heawood())).empty());
}

TEST_CASE("profile of a planar K4 trigon") {
  Drawing d = k4_planar();
  TrigonProfile p = trigon_profile(d, make_triangle(1, 2, 3));
  CHECK(p.c == std::array<int, 3>{0, 0, 0});
  for (int i = 0; i < 3; ++i) {
    CHECK(std::max(p.m[i][0], p.m[i][1]) == 1); // vertex 4's spoke
    CHECK(p.d[i] == 0);
  }
  CHECK(p.c_star == 0);
  auto [red, apex] = is_cr_reducible(d, make_triangle(1, 2, 3));
  CHECK_FALSE(red);
  CHECK(apex == -1);
}

TEST_CASE("profiles of the two D5 trigons") {
  Drawing d = d5();
  SECTION("trigon {1,2,3}: the crossed edge e(1,2) sits opposite vertex 3") {
    TrigonProfile p = trigon_profile(d, make_triangle(1, 2, 3));
    CHECK(p.c == std::array<int, 3>{0, 0, 1});
    CHECK(p.m[2][0] + p.m[2][1] == 2);
    CHECK(p.d[2] == 1); // e(3,4) and e(3,5) leave on opposite sides
    CHECK(p.c_star == 0);
    CHECK_FALSE(is_cr_reducible(d, make_triangle(1, 2, 3)).first);
  }
  SECTION("trigon {1,2,4}") {
    TrigonProfile p = trigon_profile(d, make_triangle(1, 2, 4));
    CHECK(p.c == std::array<int, 3>{0, 0, 1});
    CHECK(p.d == std::array<int, 3>{0, 0, 1});
    CHECK(p.m[2] == std::array<int, 2>{1, 1});
    CHECK(p.c_star == 0);
    CHECK_FALSE(is_cr_reducible(d, make_triangle(1, 2, 4)).first);
  }
}

TEST_CASE("profile bookkeeping identities on a crossing-rich drawing") {
  Drawing d = convex_drawing(complete(6));
  for (const Triangle& t : trigons(d)) {
    TrigonProfile p = trigon_profile(d, t);
    std::array<Vertex, 3> v{t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i)
      CHECK(p.m[i][0] + p.m[i][1] == d.base().degree(v[i]) - 2);
    CHECK(p.c[0] + p.c[1] + p.c[2] + p.c_star == d.crossing_count());
  }
}

TEST_CASE("profile requires a good drawing and a real triangle") {
  Drawing d = d5();
  CHECK_THROWS_AS(trigon_profile(d, make_triangle(1, 2, 99)), error);
  // An adjacent-edge crossing breaks goodness; profiles must refuse.
  Graph g;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  // No triangle drawing with a bad crossing handy here; instead check the
  // goodness gate via the two-edge map from the drawing tests.
  Graph p3;
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  std::vector<CrossingRef> cross{{0, 1}};
  std::vector<std::vector<int>> seq{{0}, {0}};
  std::map<Vertex, std::vector<int>> vrot{{0, {0}}, {1, {0, 1}}, {2, {1}}};
  std::vector<std::array<CrossDart, 4>> crot{
      {CrossDart{0, true}, CrossDart{1, false}, CrossDart{0, false}, CrossDart{1, true}}};
  Drawing bad = Drawing::build(p3, cross, seq, vrot, crot);
  CHECK_THROWS_AS(trigon_profile(bad, make_triangle(0, 1, 2)), error);
}

TEST_CASE("surgery on planar K4 yields planar K2,3") {
  Drawing d = k4_planar();
  Triangle t = make_triangle(1, 2, 3);
  for (int apex = 0; apex < 3; ++apex)
    for (int side = 0; side < 2; ++side) {
      Drawing out = delta_y_surgery(d, t, apex, side);
      TrigonProfile p = trigon_profile(d, t);
      CHECK(out.crossing_count() == p.m[apex][side]);
      CHECK(is_isomorphic(out.base(), complete_bipartite(2, 3)));
      if (out.crossing_count() == 0) CHECK(out.face_count() == 3); // V=5 E=6
    }
  auto [best, count] = best_surgery(d, t);
  CHECK(count == 0);
  CHECK(best.is_good());
}

TEST_CASE("surgery on D5 realizes the profile formula") {
  Drawing d = d5();
  for (const Triangle& t : trigons(d)) {
    TrigonProfile p = trigon_profile(d, t);
    for (int apex = 0; apex < 3; ++apex)
      for (int side = 0; side < 2; ++side) {
        Drawing out = delta_y_surgery(d, t, apex, side);
        int cj = p.c[(apex + 1) % 3], ck = p.c[(apex + 2) % 3];
        CHECK(out.crossing_count() == p.m[apex][side] + cj + ck + p.c_star);
        CHECK(out.is_good());
        CHECK(out.base() == delta_y(d.base(), t).first);
      }
  }
  auto [best, count] = best_surgery(d, make_triangle(1, 2, 3));
  CHECK(count == 1);
  auto [best2, count2] = best_surgery(d, make_triangle(1, 2, 4));
  CHECK(count2 == 1);
}

TEST_CASE("a reducible trigon exists in convex K6 and surgery drops below it") {
  Drawing d = convex_drawing(complete(6));
  bool found = false;
  for (const Triangle& t : trigons(d)) {
    auto [red, apex] = is_cr_reducible(d, t);
    if (!red) continue;
    found = true;
    auto [out, count] = best_surgery(d, t);
    CHECK(count < d.crossing_count());
    CHECK(out.crossing_count() == count);
  }
  CHECK(found);
}

TEST_CASE("surgery formula holds across random convex drawings") {
  std::mt19937 rng(271828);
  int drawings = 0, surgeries = 0;
  while (drawings < 25) {
    int n = 5 + int(rng() % 3);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 70) g.add_edge(i, j);
    if (triangles(g).empty()) continue;
    Drawing d = convex_drawing(g);
    ++drawings;
    for (const Triangle& t : triangles(g)) {
      TrigonProfile p = trigon_profile(d, t);
      for (int apex = 0; apex < 3; ++apex)
        for (int side = 0; side < 2; ++side) {
          Drawing out = delta_y_surgery(d, t, apex, side);
          int cj = p.c[(apex + 1) % 3], ck = p.c[(apex + 2) % 3];
          REQUIRE(out.crossing_count() == p.m[apex][side] + cj + ck + p.c_star);
          REQUIRE(out.is_good());
          ++surgeries;
        }
    }
  }
  CHECK(surgeries > 200);
}
