#pragma once

// Upper-bound heuristic: grow a maximal planar subgraph over a random
// edge order, embed it, then route each leftover edge through a
// shortest path in the face-adjacency structure of the current
// planarized drawing, one crossing per face step. Crossings with edges
// sharing an endpoint are banned outright (G2) and an edge is never
// crossed twice by the same route (G3, enforced by ban-and-retry), so
// every produced drawing is valid and good. Randomized restarts plus a
// remove-and-reroute improvement pass; deterministic for a fixed seed.

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "xing/budget.hpp"
#include "xing/drawing.hpp"
#include "xing/graph.hpp"
#include "xing/planarity.hpp"

namespace xing {
namespace detail {

// Drawing-under-construction in original edge ids over the subgraph of
// placed edges. Every mutation funnels through Drawing::build, so the
// Euler validation runs at each step.
struct RouteState {
  const Graph* g = nullptr;
  std::vector<char> placed;
  std::vector<CrossingRef> crossings;
  std::vector<std::vector<int>> seq; // per original edge, lo -> hi
  std::map<Vertex, std::vector<int>> vrot;
  std::vector<std::array<CrossDart, 4>> crot;

  explicit RouteState(const Graph& graph)
      : g(&graph), placed(graph.edge_count(), 0), seq(graph.edge_count()) {}

  [[nodiscard]] bool complete() const {
    return std::find(placed.begin(), placed.end(), 0) == placed.end();
  }

  struct Built {
    Drawing drawing;
    std::vector<int> sub_of;
    std::vector<int> orig_of;
  };

  [[nodiscard]] Built build() const {
    Graph sub;
    std::vector<int> sub_of(g->edge_count(), -1), orig_of;
    if (complete()) {
      sub = *g;
      orig_of.resize(g->edge_count());
      std::iota(sub_of.begin(), sub_of.end(), 0);
      std::iota(orig_of.begin(), orig_of.end(), 0);
    } else {
      for (Vertex v : g->vertices()) sub.add_vertex(v);
      for (int e = 0; e < g->edge_count(); ++e) {
        if (!placed[e]) continue;
        const Edge& ed = g->edges()[e];
        sub_of[e] = int(orig_of.size());
        orig_of.push_back(e);
        sub.add_edge(ed.u, ed.v);
      }
    }
    std::vector<CrossingRef> cr;
    for (const CrossingRef& c : crossings)
      cr.push_back({sub_of[c.edge_a], sub_of[c.edge_b]});
    std::vector<std::vector<int>> sseq(orig_of.size());
    for (size_t s = 0; s < orig_of.size(); ++s) sseq[s] = seq[orig_of[s]];
    std::map<Vertex, std::vector<int>> svrot;
    for (const auto& [v, rot] : vrot) {
      auto& out = svrot[v];
      for (int e : rot) out.push_back(sub_of[e]);
    }
    std::vector<std::array<CrossDart, 4>> scrot;
    for (const auto& rot : crot) {
      std::array<CrossDart, 4> r{};
      for (int i = 0; i < 4; ++i) r[i] = {sub_of[rot[i].edge], rot[i].toward_hi};
      scrot.push_back(r);
    }
    return {Drawing::build(std::move(sub), std::move(cr), std::move(sseq),
                           std::move(svrot), std::move(scrot)),
            std::move(sub_of), std::move(orig_of)};
  }

  // Route edge e through the current drawing. Returns false when every
  // admissible route is blocked.
  bool route_edge(int e) {
    const Edge& ed = g->edges()[e];
    std::set<int> banned;
    for (int o = 0; o < g->edge_count(); ++o) {
      if (!placed[o]) continue;
      const Edge& od = g->edges()[o];
      if (od.u == ed.u || od.u == ed.v || od.v == ed.u || od.v == ed.v)
        banned.insert(o);
    }

    Built built = build();
    PlanarMap m = built.drawing.planarization();
    auto faces = m.faces();
    int nf = int(faces.size());
    int nd = int(m.segments.size()) * 2;
    std::vector<int> face_of(nd, -1);
    for (int f = 0; f < nf; ++f)
      for (int d : faces[f]) face_of[d] = f;

    int un = g->index_of(ed.u), vn = g->index_of(ed.v);
    std::vector<char> is_start(nf, 0), is_target(nf, 0);
    for (int d = 0; d < nd; ++d) {
      if (m.origin(d) == un) is_start[face_of[d]] = 1;
      if (m.origin(d) == vn) is_target[face_of[d]] = 1;
    }

    for (int attempt = 0; attempt <= g->edge_count(); ++attempt) {
      std::vector<int> dist(nf, -1);
      std::vector<std::pair<int, int>> via(nf, {-1, -1}); // prev face, segment
      std::deque<int> queue;
      for (int f = 0; f < nf; ++f)
        if (is_start[f]) {
          dist[f] = 0;
          queue.push_back(f);
        }
      while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int d : faces[f]) {
          int s = d >> 1;
          int owner = built.orig_of[m.segment_edge[s]];
          if (banned.count(owner)) continue;
          int other = face_of[d ^ 1];
          if (dist[other] >= 0) continue;
          dist[other] = dist[f] + 1;
          via[other] = {f, s};
          queue.push_back(other);
        }
      }

      int target = -1;
      for (int f = 0; f < nf; ++f) {
        if (!is_target[f] || dist[f] < 0) continue;
        if (target < 0 || dist[f] < dist[target]) target = f;
      }

      if (target < 0) {
        // Endpoints in different drawn components (or an endpoint still
        // isolated): the components nest freely on the sphere, so the
        // edge inserts without crossings. Within one component a fully
        // banned frontier is a genuine dead end.
        if (same_placed_component(ed.u, ed.v)) return false;
        int fu = -1, fv = -1;
        for (int f = 0; f < nf && fu < 0; ++f)
          if (is_start[f]) fu = f;
        for (int f = 0; f < nf && fv < 0; ++f)
          if (is_target[f]) fv = f;
        apply(e, built, m, face_of, {}, {}, fu, fv);
        return true;
      }

      std::vector<int> path_segs, path_faces{target};
      for (int f = target; dist[f] > 0; f = via[f].first) {
        path_segs.push_back(via[f].second);
        path_faces.push_back(via[f].first);
      }
      std::reverse(path_segs.begin(), path_segs.end());
      std::reverse(path_faces.begin(), path_faces.end());

      // One crossing per edge along the whole route (G3).
      std::set<int> used;
      int offender = -1;
      for (int s : path_segs) {
        int owner = built.orig_of[m.segment_edge[s]];
        if (!used.insert(owner).second) {
          offender = owner;
          break;
        }
      }
      if (offender >= 0) {
        banned.insert(offender);
        continue;
      }

      apply(e, built, m, face_of, path_segs, path_faces, path_faces.front(),
            path_faces.back());
      return true;
    }
    return false;
  }

private:
  [[nodiscard]] bool same_placed_component(Vertex a, Vertex b) const {
    std::map<Vertex, Vertex> rep;
    for (Vertex v : g->vertices()) rep[v] = v;
    auto find = [&](Vertex x) {
      while (rep[x] != x) x = rep[x] = rep[rep[x]];
      return x;
    };
    for (int o = 0; o < g->edge_count(); ++o)
      if (placed[o]) rep[find(g->edges()[o].u)] = find(g->edges()[o].v);
    return find(a) == find(b);
  }

  // Realize the routed edge: new crossing nodes along the path (faces
  // path_faces[i] and [i+1] separated by path_segs[i]), rotations
  // spliced into face corners at both endpoints. All positions are
  // computed against the pre-insertion map before any mutation.
  void apply(int e, const Built& built, const PlanarMap& m,
             const std::vector<int>& face_of, const std::vector<int>& path_segs,
             const std::vector<int>& path_faces, int fu, int fv) {
    const Edge& ed = g->edges()[e];
    int slot_u = corner_slot(m, face_of, ed.u, fu);
    int slot_v = corner_slot(m, face_of, ed.v, fv);
    for (size_t i = 0; i < path_segs.size(); ++i) {
      int s = path_segs[i];
      int owner = built.orig_of[m.segment_edge[s]];
      int before = path_faces[i];
      // The dart of s whose face is the one we approach from.
      int s_dart = face_of[2 * s] == before ? 2 * s : 2 * s + 1;
      int ci = int(crossings.size());
      crossings.push_back({std::min(e, owner), std::max(e, owner)});
      // Position of s within the owner's chain = insertion slot.
      const auto& chain = m.segments_of_edge[built.sub_of[owner]];
      int slot = int(std::find(chain.begin(), chain.end(), s) - chain.begin());
      seq[owner].insert(seq[owner].begin() + slot, ci);
      seq[e].push_back(ci);
      // Entering from the side of s_dart, the back dart of e follows
      // the owner dart that shares s_dart's origin in cyclic order.
      bool origin_is_hi = (s_dart & 1) != 0;
      crot.push_back({CrossDart{owner, origin_is_hi}, CrossDart{e, false},
                      CrossDart{owner, !origin_is_hi}, CrossDart{e, true}});
    }
    auto& ru = vrot[ed.u];
    ru.insert(slot_u < 0 ? ru.end() : ru.begin() + slot_u, e);
    auto& rv = vrot[ed.v];
    rv.insert(slot_v < 0 ? rv.end() : rv.begin() + slot_v, e);
    placed[e] = 1;
  }

  // Rotation index at which a new dart at v lands inside a corner of
  // face f. The corner between consecutive rotation darts (a, b) lies
  // in the face traced through b, so the new dart goes right before a
  // dart whose face is f. A vertex with no darts yet (-1) simply
  // starts its rotation.
  [[nodiscard]] int corner_slot(const PlanarMap& m, const std::vector<int>& face_of,
                                Vertex v, int f) const {
    auto it = vrot.find(v);
    if (it == vrot.end() || it->second.empty()) return -1;
    const auto& rot = m.rotation[g->index_of(v)];
    for (size_t i = 0; i < rot.size(); ++i)
      if (face_of[rot[i]] == f) return int(i);
    throw error("route: face does not touch the vertex");
  }
};

// Undo one routed edge: drop its crossings (reindexing the survivors)
// and its two rotation entries.
inline void remove_routed_edge(RouteState& st, int e) {
  std::vector<int> remap(st.crossings.size(), -1);
  std::vector<CrossingRef> kept;
  std::vector<std::array<CrossDart, 4>> kept_rot;
  for (size_t ci = 0; ci < st.crossings.size(); ++ci) {
    if (st.crossings[ci].edge_a == e || st.crossings[ci].edge_b == e) continue;
    remap[ci] = int(kept.size());
    kept.push_back(st.crossings[ci]);
    kept_rot.push_back(st.crot[ci]);
  }
  st.crossings = std::move(kept);
  st.crot = std::move(kept_rot);
  for (auto& s : st.seq) {
    std::vector<int> out;
    for (int ci : s)
      if (remap[ci] >= 0) out.push_back(remap[ci]);
    s = std::move(out);
  }
  st.seq[e].clear();
  const Edge& ed = st.g->edges()[e];
  for (Vertex v : {ed.u, ed.v}) {
    auto& rot = st.vrot[v];
    rot.erase(std::find(rot.begin(), rot.end(), e));
    if (rot.empty()) st.vrot.erase(v);
  }
  st.placed[e] = 0;
}

} // namespace detail

// Best good drawing found across randomized restarts; never worse than
// the convex fallback. Deterministic for a fixed seed.
inline Drawing upper_bound(const Graph& g, const Budget& budget = {}, int restarts = 50) {
  budget.check();
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(budget.seed);
  int mEdges = g.edge_count();

  Drawing best = convex_drawing(g);

  for (int r = 0; r < restarts; ++r) {
    if (r > 0 && std::chrono::steady_clock::now() - t0 > budget.wall) break;

    std::vector<int> order(mEdges);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    Graph acc;
    for (Vertex v : g.vertices()) acc.add_vertex(v);
    detail::RouteState st(g);
    std::vector<int> leftover;
    for (int e : order) {
      const Edge& ed = g.edges()[e];
      acc.add_edge(ed.u, ed.v);
      if (is_planar(acc)) {
        st.placed[e] = 1;
      } else {
        acc.remove_edge(ed.u, ed.v);
        leftover.push_back(e);
      }
    }

    PlanarityResult pr = test_planarity(acc);
    for (const auto& [v, rot] : pr.rotations) {
      auto& out = st.vrot[v];
      for (int ae : rot) {
        const Edge& ed = acc.edges()[ae];
        out.push_back(g.edge_id(ed.u, ed.v));
      }
    }

    bool ok = true;
    for (int e : leftover)
      if (!st.route_edge(e)) {
        ok = false;
        break;
      }
    if (!ok) continue;

    // Remove-and-reroute improvement passes.
    for (int pass = 0; pass < 3; ++pass) {
      bool improved = false;
      std::vector<int> byload(mEdges);
      std::iota(byload.begin(), byload.end(), 0);
      std::stable_sort(byload.begin(), byload.end(), [&](int a, int b) {
        return st.seq[a].size() > st.seq[b].size();
      });
      for (int e : byload) {
        size_t old = st.seq[e].size();
        if (old == 0) break;
        detail::RouteState saved = st;
        remove_routed_edge(st, e);
        if (st.route_edge(e) && st.seq[e].size() < old)
          improved = true;
        else
          st = std::move(saved);
      }
      if (!improved) break;
    }

    Drawing d = st.build().drawing;
    if (d.crossing_count() < best.crossing_count()) best = d;
  }
  return best;
}

} // namespace xing
