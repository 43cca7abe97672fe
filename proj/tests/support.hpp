#pragma once

// Shared fixtures and small independent oracles for the test suite.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xing/drawing.hpp"
#include "xing/graph.hpp"
#include "xing/isomorphism.hpp"

namespace testsupport {

using namespace xing;

// Planar K4 on vertices 1..4: triangle {1,2,3} with 4 inside.
// Rotations are the counterclockwise geometric ones.
inline Drawing k4_planar() {
  Graph g;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) g.add_edge(i, j);
  // edge ids: (1,2)=0 (1,3)=1 (1,4)=2 (2,3)=3 (2,4)=4 (3,4)=5
  std::map<Vertex, std::vector<int>> vrot{
      {1, {0, 2, 1}}, {2, {3, 4, 0}}, {3, {1, 5, 3}}, {4, {5, 2, 4}}};
  return Drawing::build(g, {}, std::vector<std::vector<int>>(6), vrot, {});
}

// K5 on vertices 1..5 drawn with a single crossing: K4 as above, vertex
// 5 outside the triangle below edge (1,2), edge (4,5) crossing (1,2),
// edge (3,5) routed around the left side.
inline Drawing d5() {
  Graph g;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) g.add_edge(i, j);
  // edge ids: (1,2)=0 (1,3)=1 (1,4)=2 (1,5)=3 (2,3)=4
  //           (2,4)=5 (2,5)=6 (3,4)=7 (3,5)=8 (4,5)=9
  std::vector<CrossingRef> cross{{0, 9}};
  std::vector<std::vector<int>> seq(10);
  seq[0] = {0};
  seq[9] = {0};
  std::map<Vertex, std::vector<int>> vrot{{1, {0, 2, 1, 3}},
                                          {2, {4, 5, 0, 6}},
                                          {3, {8, 1, 7, 4}},
                                          {4, {7, 2, 9, 5}},
                                          {5, {6, 9, 3, 8}}};
  std::vector<std::array<CrossDart, 4>> crot{
      {CrossDart{0, true}, CrossDart{9, false}, CrossDart{0, false}, CrossDart{9, true}}};
  return Drawing::build(g, cross, seq, vrot, crot);
}

// All simple graphs on n labeled vertices 0..n-1, one per edge subset.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << slots.size()); ++bits) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1) g.add_edge(slots[s].first, slots[s].second);
    fn(g);
  }
}

// Brute-force isomorphism over all vertex bijections; independent of
// the canonical-form machinery.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& gv = g.vertices();
  const auto& hv = h.vertices();
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      int i = g.index_of(e.u), j = g.index_of(e.v);
      if (!h.adjacent(hv[perm[i]], hv[perm[j]])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All connected simple graphs on exactly n labeled vertices 0..n-1,
// one representative per isomorphism class (canonical-form dedupe).
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
      while (rep[x] != x) x = rep[x] = rep[rep[x]];
      return x;
    };
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask & (1u << s)) {
        g.add_edge(slots[s].first, slots[s].second);
        rep[find(slots[s].first)] = find(slots[s].second);
      }
    bool connected = true;
    for (int v = 1; v < n; ++v) connected &= find(v) == find(0);
    if (!connected) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

// Exhaustive search for a simple cycle of the given length.
inline bool has_cycle_of_length(const Graph& g, int len) {
  const auto& vs = g.vertices();
  int n = int(vs.size());
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    int i = g.index_of(e.u), j = g.index_of(e.v);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> used(n, 0);
  std::vector<int> path;
  bool found = false;
  auto dfs = [&](auto&& self, int start, int at) -> void {
    if (found) return;
    if (int(path.size()) == len) {
      for (int nb : adj[at])
        if (nb == start) found = true;
      return;
    }
    for (int nb : adj[at]) {
      if (used[nb] || nb < start) continue; // force smallest vertex first
      used[nb] = 1;
      path.push_back(nb);
      self(self, start, nb);
      path.pop_back();
      used[nb] = 0;
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    path = {s};
    dfs(dfs, s, s);
  }
  return found;
}

} // namespace testsupport
