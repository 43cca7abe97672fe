// Acceptance gate: one checked claim per criterion, one printed line
// each, exit 0 only when every line says pass. Everything here is
// recomputed from scratch; registry values appear only where a line
// explicitly marks them external.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "xing/bounds.hpp"
#include "xing/closure.hpp"
#include "xing/fixtures.hpp"
#include "xing/generators.hpp"
#include "xing/heuristic.hpp"
#include "xing/isomorphism.hpp"
#include "xing/moves.hpp"
#include "xing/solver.hpp"
#include "xing/trigon.hpp"

#include "support.hpp"

using namespace xing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Criterion = Outcome (*)();

// Fails the criterion instead of aborting the run, so later criteria
// still report.
Outcome guarded(Criterion fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string what) { return {true, std::move(what)}; }

// 1. The delta-wye closure of K6 is the seven-member family with
// vertex counts 6 7 7 8 8 9 10.
Outcome closure_roster() {
  MoveClosure c = move_closure(complete(6));
  if (c.members.size() != 7)
    return fail("expected 7 members, got " + std::to_string(c.members.size()));
  std::multiset<int> sizes;
  for (const ClosureMember& m : c.members) sizes.insert(m.graph.vertex_count());
  std::multiset<int> want{6, 7, 7, 8, 8, 9, 10};
  if (sizes != want) {
    std::string got;
    for (int s : sizes) got += std::to_string(s) + " ";
    return fail("vertex counts " + got);
  }
  return pass("7 members, vertex counts 6 7 7 8 8 9 10");
}

// 2. Exact crossing numbers across the family: 3 for K6, Q7, P7, Q8
// and 2 for P8, P9, P10, each member settled within its own budget.
Outcome family_exact_values() {
  const std::map<std::string, int> want{{"K6", 3}, {"Q7", 3}, {"P7", 3},
                                        {"Q8", 3}, {"P8", 2}, {"P9", 2},
                                        {"P10", 2}};
  std::string report;
  for (const auto& [name, cr] : want) {
    auto t0 = std::chrono::steady_clock::now();
    Budget b;
    b.wall = std::chrono::minutes(5);
    CrBounds r = crossing_number(k6_family().at(name), b);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (r.status != "exact")
      return fail(name + " status " + r.status + " after " +
                  std::to_string(ms) + " ms");
    if (r.ub != cr)
      return fail(name + " = " + std::to_string(r.ub) + ", expected " +
                  std::to_string(cr));
    if (ms > 5 * 60 * 1000)
      return fail(name + " took " + std::to_string(ms) + " ms");
    report += name + "=" + std::to_string(r.ub) + " ";
  }
  report.pop_back();
  return pass(report);
}

// 3. Heawood graph: the girth bound 21 - 6*12/4 = 3 meets a heuristic
// 3-crossing drawing, so cr = 3 exactly with no search at all.
Outcome heawood_exact() {
  Graph g = named_graph("Heawood");
  LowerBound lb = lower_bounds(g);
  if (lb.value != 3 || lb.certificate != "girth")
    return fail("lower bound " + std::to_string(lb.value) + " (" +
                lb.certificate + "), expected 3 (girth)");
  Drawing w = upper_bound(g);
  if (w.crossing_count() != 3 || !w.is_good())
    return fail("heuristic drawing has " +
                std::to_string(w.crossing_count()) + " crossings");
  CrBounds r = crossing_number(g);
  if (r.status != "exact" || r.ub != 3)
    return fail("status " + r.status + ", cr bounds [" +
                std::to_string(r.lb) + ", " + std::to_string(r.ub) + "]");
  return pass("cr = 3, girth bound meets a good 3-crossing drawing");
}

// 4. K7 at desk scale: a 9-crossing good drawing, counting lower bound
// 7, honest report lb in [7, 9] with ub 9. The registry's cr(K7) = 9
// is external ground truth, not computed here; refuting k = 8 is out
// of scope.
Outcome k7_bounds() {
  Graph g = complete(7);
  Drawing w = upper_bound(g);
  if (w.crossing_count() != 9 || !w.is_good())
    return fail("heuristic drawing has " +
                std::to_string(w.crossing_count()) + " crossings");
  LowerBound lb = lower_bounds(g);
  if (lb.value < 7)
    return fail("lower bound " + std::to_string(lb.value) + ", expected >= 7");
  if (lb.certificate != "counting")
    return fail("certificate " + lb.certificate + ", expected counting");
  Budget b;
  b.wall = std::chrono::seconds(15);
  CrBounds r = crossing_number(g, b);
  if (r.lb < 7 || r.lb > 9 || r.ub != 9)
    return fail("report [" + std::to_string(r.lb) + ", " +
                std::to_string(r.ub) + "], expected lb in [7,9] and ub 9");
  RegistryEntry reg = registry("K7");
  if (reg.value != 9)
    return fail("registry K7 = " + std::to_string(reg.value));
  return pass("good 9-crossing drawing, counting lb " +
              std::to_string(lb.value) + ", report [" + std::to_string(r.lb) +
              ", 9], registry 9 external (" + reg.source + ")");
}

// 5. One delta-wye step below K7: the heuristic reaches 8 crossings on
// the triangle-replaced graph, and the shipped 9-crossing K7 drawing
// carries a cr-reducible trigon whose best surgery lands a good
// drawing of that graph with at most 8 crossings.
Outcome k7_step_down() {
  Graph g71 = gnk(7, 1);
  Drawing w = upper_bound(g71);
  if (w.crossing_count() != 8 || !w.is_good())
    return fail("heuristic drawing of the image has " +
                std::to_string(w.crossing_count()) + " crossings");
  if (registry("K7").value != 9) return fail("registry K7 changed");

  Drawing k7 = fixtures().at("K7");
  if (k7.crossing_count() != 9) return fail("K7 fixture is not 9 crossings");
  for (const Triangle& t : trigons(k7)) {
    if (!is_cr_reducible(k7, t).first) continue;
    auto [out, count] = best_surgery(k7, t);
    if (count > 8 || !out.is_good()) continue;
    if (!is_isomorphic(out.base(), g71)) continue;
    return pass("ub 8 < 9, fixture trigon (" + std::to_string(t.a) + " " +
                std::to_string(t.b) + " " + std::to_string(t.c) +
                ") reduces to a good " + std::to_string(count) +
                "-crossing drawing of the image");
  }
  return fail("no cr-reducible trigon of the K7 fixture reaches 8 crossings");
}

// 6. The counterexample regime: one delta-wye move on K6 keeps the
// crossing number at 3, both sides settled exactly.
Outcome k6_move_keeps_cr() {
  Graph q7 = delta_y(complete(6), make_triangle(0, 1, 2)).first;
  Budget b;
  b.wall = std::chrono::minutes(5);
  CrBounds moved = crossing_number(q7, b);
  CrBounds base = crossing_number(complete(6), b);
  if (moved.status != "exact" || base.status != "exact")
    return fail("statuses " + moved.status + " / " + base.status);
  if (moved.ub != 3 || base.ub != 3)
    return fail("cr " + std::to_string(moved.ub) + " vs " +
                std::to_string(base.ub) + ", expected 3 = 3");
  return pass("exact cr stays 3 = 3 across the move");
}

// 7. The strict chain at n = 7: heuristic counts 9 > 8 > ub(two
// triangles) with the two-triangle graph at 7 or fewer, and the
// disjoint-triangle comparison graph at 8.
Outcome chain_at_seven() {
  int ub0 = upper_bound(complete(7)).crossing_count();
  int ub1 = upper_bound(gnk(7, 1)).crossing_count();
  int ub2 = upper_bound(gnk(7, 2)).crossing_count();
  int ubstar = upper_bound(named_graph("Gstar")).crossing_count();
  std::string seq = std::to_string(ub0) + " > " + std::to_string(ub1) +
                    " > " + std::to_string(ub2);
  if (ub0 != 9 || ub1 != 8 || ub2 > 7)
    return fail("ub sequence " + seq + ", expected 9 > 8 > (<= 7)");
  if (ubstar != 8)
    return fail("comparison graph ub " + std::to_string(ubstar) +
                ", expected 8");
  return pass("ub sequence " + seq + ", comparison graph ub 8");
}

// 8. Solver equals the unpruned oracle with status exact on every
// connected simple graph with up to 6 vertices, one representative per
// isomorphism class; the 6-vertex batch must be all 112 classes.
Outcome oracle_equivalence() {
  int total = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Graph> classes = testsupport::connected_graphs_up_to_iso(n);
    if (n == 6 && classes.size() != 112)
      return fail("expected 112 classes on 6 vertices, got " +
                  std::to_string(classes.size()));
    for (const Graph& g : classes) {
      CrBounds r = crossing_number(g);
      int oracle = brute_force_cr(g);
      if (r.status != "exact" || r.ub != oracle)
        return fail("class " + std::to_string(total) + " on " +
                    std::to_string(n) + " vertices: solver " +
                    std::to_string(r.ub) + " (" + r.status + "), oracle " +
                    std::to_string(oracle));
      ++total;
    }
  }
  return pass(std::to_string(total) +
              " classes agree with the oracle (112 on 6 vertices)");
}

// 9. Surgery count formula on 200 random good drawings: every trigon,
// apex, and side yields a valid drawing of the moved graph with
// exactly m[apex][side] + c_j + c_k + c_star crossings, and the best
// surgery strictly decreases the count whenever a trigon is
// cr-reducible. Zero tolerance.
Outcome surgery_suite() {
  std::mt19937 rng(97);
  int made = 0;
  long long surgeries = 0, reducible = 0;
  while (made < 200) {
    int n = 5 + int(rng() % 4);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 60) g.add_edge(i, j);
    if (triangles(g).empty()) continue;
    Budget b;
    b.seed = unsigned(rng() % 10000) + 1;
    Drawing d = upper_bound(g, b);
    if (!d.is_good()) return fail("heuristic produced a non-good drawing");
    ++made;

    for (const Triangle& t : trigons(d)) {
      TrigonProfile p = trigon_profile(d, t);
      Graph image = delta_y(g, t).first;
      if (is_cr_reducible(d, t).first) {
        ++reducible;
        auto [best, count] = best_surgery(d, t);
        if (count >= d.crossing_count())
          return fail("reducible trigon did not decrease: " +
                      std::to_string(count) + " from " +
                      std::to_string(d.crossing_count()));
        if (best.crossing_count() != count)
          return fail("best surgery count mismatch");
      }
      for (int apex = 0; apex < 3; ++apex)
        for (int side = 0; side < 2; ++side) {
          Drawing out = delta_y_surgery(d, t, apex, side);
          int cj = p.c[(apex + 1) % 3], ck = p.c[(apex + 2) % 3];
          int want = p.m[apex][side] + cj + ck + p.c_star;
          if (out.crossing_count() != want)
            return fail("count " + std::to_string(out.crossing_count()) +
                        ", formula " + std::to_string(want));
          if (out.base().vertex_count() != image.vertex_count() ||
              out.base().edge_count() != image.edge_count())
            return fail("surgery output is not the moved graph");
          for (const Edge& e : image.edges())
            if (!out.base().adjacent(e.u, e.v))
              return fail("surgery output is missing an image edge");
          ++surgeries;
        }
    }
  }

  // Heuristic drawings sit close to optimal, so cr-reducible trigons
  // are rare above; the shipped fixtures supply denser cases.
  std::map<std::string, Drawing> fx = fixtures();
  for (const char* name : {"K7", "G7_1", "Q8", "Heawood"}) {
    const Drawing& d = fx.at(name);
    for (const Triangle& t : trigons(d)) {
      if (!is_cr_reducible(d, t).first) continue;
      ++reducible;
      auto [best, count] = best_surgery(d, t);
      if (count >= d.crossing_count() || best.crossing_count() != count)
        return fail(std::string("reducible trigon of the ") + name +
                    " fixture did not decrease");
    }
  }
  return pass(std::to_string(surgeries) + " surgeries over 200 drawings, " +
              std::to_string(reducible) + " reducible trigons all decreased");
}

// 10. Closed-form values match the oracle where the oracle can reach,
// and the proven flags flip exactly where the literature stops: past
// n = 12 for complete graphs, past one side 6 for bipartite ones
// except (7,7), (7,8), (7,9).
Outcome formula_oracles() {
  for (int n = 1; n <= 6; ++n) {
    FormulaValue f = guy(n);
    int oracle = brute_force_cr(complete(n));
    if (f.value != oracle)
      return fail("guy(" + std::to_string(n) + ") = " +
                  std::to_string(f.value) + ", oracle " +
                  std::to_string(oracle));
    if (!f.proven) return fail("guy(" + std::to_string(n) + ") not proven");
  }
  for (int p = 1; p <= 4; ++p)
    for (int q = p; q <= 4; ++q) {
      FormulaValue f = zarankiewicz(p, q);
      int oracle = brute_force_cr(complete_bipartite(p, q));
      if (f.value != oracle)
        return fail("zarankiewicz(" + std::to_string(p) + "," +
                    std::to_string(q) + ") = " + std::to_string(f.value) +
                    ", oracle " + std::to_string(oracle));
      if (!f.proven)
        return fail("zarankiewicz(" + std::to_string(p) + "," +
                    std::to_string(q) + ") not proven");
    }
  if (!guy(12).proven || guy(13).proven)
    return fail("guy proven flag does not flip at 13");
  if (!zarankiewicz(6, 100).proven) return fail("(6,100) should be proven");
  if (!zarankiewicz(7, 7).proven || !zarankiewicz(7, 8).proven ||
      !zarankiewicz(7, 9).proven)
    return fail("(7,7)..(7,9) should be proven");
  if (zarankiewicz(7, 10).proven || zarankiewicz(8, 8).proven)
    return fail("proven flag does not flip past (7,9)");
  return pass("formulas match the oracle through K6 and K4,4; proven flags "
              "flip at n = 13 and past (7,9)");
}

struct Entry {
  const char* label;
  Criterion fn;
  int limit_s; // 0 means no wall target
};

} // namespace

int main() {
  const Entry entries[] = {
      {"petersen family closure", closure_roster, 10},
      {"family exact values", family_exact_values, 0},
      {"heawood exact", heawood_exact, 30},
      {"k7 bounds", k7_bounds, 120},
      {"k7 step down", k7_step_down, 60},
      {"k6 move keeps cr", k6_move_keeps_cr, 300},
      {"chain at seven", chain_at_seven, 300},
      {"oracle equivalence", oracle_equivalence, 600},
      {"surgery suite", surgery_suite, 0},
      {"formula oracles", formula_oracles, 300},
  };

  int failures = 0;
  for (int i = 0; i < 10; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome r = guarded(entries[i].fn);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (r.ok && entries[i].limit_s && secs > entries[i].limit_s) {
      r.ok = false;
      r.detail = "over the " + std::to_string(entries[i].limit_s) +
                 " s target: " + r.detail;
    }
    std::printf("criterion %2d %s: %s - %s (%.1f s)\n", i + 1,
                r.ok ? "pass" : "FAIL", entries[i].label, r.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!r.ok) ++failures;
  }
  if (failures) {
    std::printf("acceptance: %d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all 10 criteria pass\n");
  return 0;
}
