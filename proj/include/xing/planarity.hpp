#pragma once

// Planarity testing with verified certificates. The test itself is
// Boyer-Myrvold (Boost.Graph); we never take its word for anything:
// a "planar" answer is converted to a rotation system and face-traced
// (Euler check) by our own Drawing validation, and a "non-planar"
// answer's Kuratowski edge set is independently re-verified to contain
// a K5 or K3,3 minor (pendant trimming, degree-2 suppression, and for
// K5 a bounded search over splits of branch vertices, since the
// extractor may deliver K5 with a branch vertex split in two).

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "xing/drawing.hpp"
#include "xing/graph.hpp"

namespace xing {

// "K5", "K3,3", or "" when the graph is not a subdivision of either.
// A subdivision here means exactly: after suppressing all degree-2
// vertices the graph is K5 or K3,3, with no leftover vertices of
// degree 0 or 1 and no parallel edges arising.
inline std::string subdivision_type(const Graph& g) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) return "";
  for (;;) {
    Vertex found = -1;
    for (auto& [v, nb] : adj) {
      if (nb.size() == 1) return "";
      if (nb.size() == 2) {
        found = v;
        break;
      }
    }
    if (found < 0) break;
    Vertex a = adj[found][0], b = adj[found][1];
    if (a == b) return ""; // cycle collapsed onto itself
    auto drop = [&](Vertex from, Vertex gone) {
      auto& nb = adj[from];
      nb.erase(std::find(nb.begin(), nb.end(), gone));
    };
    // Suppressing between already-adjacent branch vertices would need a
    // parallel edge; genuine subdivisions of simple graphs never do.
    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) return "";
    drop(a, found);
    drop(b, found);
    adj[a].push_back(b);
    adj[b].push_back(a);
    adj.erase(found);
  }
  Graph core;
  for (auto& [v, nb] : adj)
    for (Vertex u : nb)
      if (v < u) core.add_edge(v, u);
  if (core.vertex_count() == 5 && core.edge_count() == 10) return "K5";
  if (core.vertex_count() == 6 && core.edge_count() == 9) {
    GraphInvariants inv = invariants(core);
    if (inv.bipartite && inv.degree_sequence == std::vector<int>(6, 3)) return "K3,3";
  }
  return "";
}

namespace detail {

using CoreAdj = std::map<Vertex, std::set<Vertex>>;

// Minor-sound reductions only: delete degree-<=1 vertices, suppress a
// degree-2 vertex (contract one of its edges), and delete a degree-2
// vertex whose neighbors are already adjacent (its path is redundant).
inline void reduce_core(CoreAdj& adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end();) {
      auto& [v, nb] = *it;
      if (nb.size() > 2) {
        ++it;
        continue;
      }
      for (Vertex u : nb) adj[u].erase(v);
      if (nb.size() == 2) {
        Vertex a = *nb.begin(), b = *std::next(nb.begin());
        if (!adj[a].count(b)) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
      }
      it = adj.erase(it);
      changed = true;
    }
  }
}

inline bool core_is_k5(const CoreAdj& adj) {
  if (adj.size() != 5) return false;
  for (auto& [v, nb] : adj)
    if (nb.size() != 4) return false;
  return true;
}

inline bool core_is_k33(const CoreAdj& adj) {
  if (adj.size() != 6) return false;
  for (auto& [v, nb] : adj)
    if (nb.size() != 3) return false;
  const auto& [v0, side] = *adj.begin();
  for (auto& [v, nb] : adj) {
    bool opposite = side.count(v) != 0;
    if (v != v0 && !opposite && nb != side) return false;
    if (opposite && nb.count(v0) == 0) return false;
  }
  return true;
}

// Whether contracting edges between adjacent degree-3 vertices (the
// shape a split K5 branch vertex reduces to) can reach K5.
inline bool contracts_to_k5(CoreAdj adj, int depth) {
  reduce_core(adj);
  if (core_is_k5(adj)) return true;
  if (depth == 0 || adj.size() < 6) return false;
  for (auto& [v, nb] : adj) {
    if (nb.size() != 3) continue;
    for (Vertex u : nb) {
      if (u < v || adj.at(u).size() != 3) continue;
      CoreAdj next = adj;
      next[v].erase(u);
      for (Vertex w : next[u]) {
        if (w == v) continue;
        next[w].erase(u);
        next[w].insert(v);
        next[v].insert(w);
      }
      next.erase(u);
      if (contracts_to_k5(std::move(next), depth - 1)) return true;
    }
  }
  return false;
}

} // namespace detail

// "K5", "K3,3", or "" when the graph does not visibly contain either
// as a minor. Unlike subdivision_type this tolerates pendant edges,
// redundant paths, and K5 certificates with split branch vertices; a
// nonempty answer always means the minor is really present, since
// every reduction step is a deletion or contraction.
inline std::string kuratowski_kind(const Graph& g) {
  detail::CoreAdj adj;
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  detail::reduce_core(adj);
  if (detail::core_is_k5(adj)) return "K5";
  if (detail::core_is_k33(adj)) return "K3,3";
  if (detail::contracts_to_k5(adj, 6)) return "K5";
  return "";
}

struct PlanarityResult {
  bool planar = false;
  std::map<Vertex, std::vector<int>> rotations; // planar: embedding as edge ids
  std::vector<int> obstruction_edges;           // non-planar: verified Kuratowski edge set
  std::string obstruction_kind;                 // "K5" or "K3,3" (K5 possibly split form)
};

inline PlanarityResult test_planarity(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  int n = g.vertex_count();
  if (n == 0) {
    PlanarityResult out;
    out.planar = true;
    return out;
  }
  BoostGraph bg(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    boost::add_edge(g.index_of(ed.u), g.index_of(ed.v),
                    boost::property<boost::edge_index_t, int>(e), bg);
  }

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(n);
  std::vector<EdgeDesc> kuratowski;

  PlanarityResult out;
  out.planar = boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          embedding.empty() ? nullptr : &embedding[0],
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));

  auto index = boost::get(boost::edge_index, bg);
  if (out.planar) {
    for (int i = 0; i < n; ++i) {
      std::vector<int>& rot = out.rotations[g.vertices()[i]];
      for (EdgeDesc e : embedding[i]) rot.push_back(boost::get(index, e));
    }
    return out;
  }

  // Boyer-Myrvold may emit an edge several times; an edge belongs to
  // the extracted subdivision iff its multiplicity is odd.
  std::map<int, int> mult;
  for (EdgeDesc e : kuratowski) ++mult[boost::get(index, e)];
  for (auto [e, k] : mult)
    if (k % 2) out.obstruction_edges.push_back(e);
  Graph sub;
  for (int e : out.obstruction_edges) {
    const Edge& ed = g.edges()[e];
    sub.add_edge(ed.u, ed.v);
  }
  out.obstruction_kind = kuratowski_kind(sub);
  if (out.obstruction_kind.empty())
    throw error("test_planarity: reported obstruction fails Kuratowski verification");
  return out;
}

// Zero-crossing drawing of a planar graph; the Drawing constructor's
// face tracing independently confirms the embedding is spherical.
inline Drawing planar_drawing(const Graph& g) {
  PlanarityResult r = test_planarity(g);
  if (!r.planar) throw error("planar_drawing: graph is not planar");
  return Drawing::build(g, {}, std::vector<std::vector<int>>(g.edge_count()),
                        std::move(r.rotations), {});
}

inline bool is_planar(const Graph& g) { return test_planarity(g).planar; }

} // namespace xing
