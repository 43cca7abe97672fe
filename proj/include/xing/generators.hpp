#pragma once

// Named graph constructions: complete, complete bipartite, cycles,
// Heawood, Petersen, the seven-member delta-wye family of K6, and the
// hub-triangle family G_n^(k) (K_n with k edge-disjoint triangles
// through a common hub replaced by stars).

#include <map>
#include <string>
#include <vector>

#include "xing/closure.hpp"
#include "xing/graph.hpp"
#include "xing/isomorphism.hpp"
#include "xing/moves.hpp"

namespace xing {

inline Graph complete(int n) {
  if (n < 1) throw error("complete: need n >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw error("complete_bipartite: need p,q >= 1");
  Graph g;
  for (int i = 0; i < p + q; ++i) g.add_vertex(i);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw error("cycle: need n >= 3");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Point-line incidence graph of the Fano plane: points 0..6, lines
// 7..13 where line j covers {j, j+1, j+3} mod 7. Cubic, 21 edges,
// girth 6.
inline Graph heawood() {
  Graph g;
  for (int j = 0; j < 7; ++j)
    for (int d : {0, 1, 3}) g.add_edge((j + d) % 7, 7 + j);
  return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g;
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// K_n with k edge-disjoint triangles through hub vertex 0 replaced by
// stars. Triangle i uses the (2i-1)-th and 2i-th non-hub vertices; its
// star center gets the next unused id (n, n+1, ...). Labels: hub "a",
// centers "v_i", their former triangle corners "t_{i,1}"/"t_{i,2}",
// untouched vertices "1".."n-1-2k".
inline Graph gnk(int n, int k) {
  if (n < 3) throw error("gnk: need n >= 3");
  if (k < 0 || 2 * k > n - 1)
    throw error("gnk: need 0 <= 2k <= n-1, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  Graph g = complete(n);
  for (int i = 1; i <= k; ++i) {
    auto [h, step] = delta_y(g, make_triangle(0, 2 * i - 1, 2 * i));
    g = std::move(h);
    assert(step.center == n + i - 1);
  }
  g.set_label(0, "a");
  for (int i = 1; i <= k; ++i) {
    g.set_label(n + i - 1, "v_" + std::to_string(i));
    g.set_label(2 * i - 1, "t_{" + std::to_string(i) + ",1}");
    g.set_label(2 * i, "t_{" + std::to_string(i) + ",2}");
  }
  for (int j = 2 * k + 1; j < n; ++j) g.set_label(j, std::to_string(j - 2 * k));
  return g;
}

// The seven graphs reachable from K6 by delta-wye and wye-delta moves,
// keyed K6, Q7, P7, Q8, P8, P9, P10. Disambiguation: Q7 is the
// delta-wye image of K6; Q8 is the bipartite 8-vertex member; P10 is
// the Petersen graph.
inline const std::map<std::string, Graph>& k6_family() {
  static const std::map<std::string, Graph> table = [] {
    MoveClosure c = move_closure(complete(6));
    std::string q7_canon = canonical_form(delta_y(complete(6), make_triangle(0, 1, 2)).first);
    std::map<std::string, Graph> out;
    for (const ClosureMember& m : c.members) {
      std::string name;
      switch (m.graph.vertex_count()) {
        case 6: name = "K6"; break;
        case 7: name = (m.canon == q7_canon) ? "Q7" : "P7"; break;
        case 8: name = invariants(m.graph).bipartite ? "Q8" : "P8"; break;
        case 9: name = "P9"; break;
        case 10: name = "P10"; break;
        default: throw error("k6_family: unexpected member size");
      }
      if (!out.emplace(name, m.graph).second)
        throw error("k6_family: duplicate member name " + name);
    }
    if (out.size() != 7) throw error("k6_family: expected 7 members");
    return out;
  }();
  return table;
}

// Lookup by name: K<n>, K<p>,<q>, C<n>, Heawood, Petersen, the K6
// family members, G7_1, G7_2, Gstar, Gnk(<n>,<k>).
inline Graph named_graph(const std::string& name) {
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (name == "Heawood") return heawood();
  if (name == "Petersen") return petersen();
  if (name == "G7_1") return gnk(7, 1);
  if (name == "G7_2") return gnk(7, 2);
  if (name == "Gstar") {
    Graph g = delta_y(complete(7), make_triangle(0, 1, 2)).first;
    return delta_y(g, make_triangle(3, 4, 5)).first;
  }
  if (name == "Q7" || name == "P7" || name == "Q8" || name == "P8" || name == "P9" ||
      name == "P10")
    return k6_family().at(name);
  if (name.size() > 1 && name[0] == 'K') {
    std::string rest = name.substr(1);
    size_t comma = rest.find(',');
    if (comma == std::string::npos) {
      if (all_digits(rest)) return complete(std::stoi(rest));
    } else {
      std::string p = rest.substr(0, comma), q = rest.substr(comma + 1);
      if (all_digits(p) && all_digits(q))
        return complete_bipartite(std::stoi(p), std::stoi(q));
    }
  }
  if (name.size() > 1 && name[0] == 'C' && all_digits(name.substr(1)))
    return cycle(std::stoi(name.substr(1)));
  if (name.rfind("Gnk(", 0) == 0 && name.back() == ')') {
    std::string args = name.substr(4, name.size() - 5);
    size_t comma = args.find(',');
    if (comma != std::string::npos) {
      std::string a = args.substr(0, comma), b = args.substr(comma + 1);
      if (all_digits(a) && all_digits(b)) return gnk(std::stoi(a), std::stoi(b));
    }
  }
  throw error("named_graph: unknown name '" + name + "'");
}

} // namespace xing
