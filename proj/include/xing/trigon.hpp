#pragma once

// Trigon bookkeeping on good drawings, cr-reducible trigon detection,
// and the delta-wye drawing surgery.
//
// For a trigon with vertices (v_0, v_1, v_2) drawn as a simple closed
// curve: c[i] counts the crossings on the edge opposite v_i, and the
// two trigon edges at v_i split the rotation there into two arcs of
// sizes m[i][0] and m[i][1]. Arc 0 at v_i starts after the dart toward
// v_{i+1} (indices cyclic). Only min(m[i][0], m[i][1]) is ever used
// downstream, so the arc labeling is a documented convention and
// nothing more.
//
// The surgery realizes the trigon-to-star rewiring of the drawing with
// crossing count m[apex][side] + c_j + c_k + c_star: the edge opposite
// the apex is erased, the new center w sits in the corner of the
// chosen side at the apex, the strands w->v_j and w->v_k inherit the
// two former trigon edge routes, and the strand leaving across the
// chosen arc picks up one crossing per arc edge, right next to the
// apex, before any of that edge's old crossings.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "xing/drawing.hpp"
#include "xing/moves.hpp"

namespace xing {

struct TrigonProfile {
  Triangle trigon;
  std::array<int, 3> c{};                // crossings on the edge opposite v_i
  std::array<std::array<int, 2>, 3> m{}; // rotation arc sizes at v_i
  std::array<int, 3> d{};                // min(m[i][0], m[i][1])
  int c_star = 0;                        // crossings on no trigon edge
};

inline std::vector<Triangle> trigons(const Drawing& d) { return triangles(d.base()); }

namespace detail {

inline int rot_index(const std::vector<int>& rot, int edge) {
  for (int i = 0; i < int(rot.size()); ++i)
    if (rot[i] == edge) return i;
  throw error("trigon: edge missing from rotation");
}

// Entries strictly between `from` and `to` walking forward cyclically.
inline std::vector<int> rot_arc(const std::vector<int>& rot, int from_edge, int to_edge) {
  int p = rot_index(rot, from_edge), q = rot_index(rot, to_edge);
  std::vector<int> arc;
  for (int i = (p + 1) % int(rot.size()); i != q; i = (i + 1) % int(rot.size()))
    arc.push_back(rot[i]);
  return arc;
}

} // namespace detail

inline TrigonProfile trigon_profile(const Drawing& dr, const Triangle& t) {
  if (!dr.is_good()) throw error("trigon_profile: drawing is not good");
  const Graph& g = dr.base();
  if (!is_triangle_of(g, t)) throw error("trigon_profile: not a triangle of the base graph");
  std::array<Vertex, 3> v{t.a, t.b, t.c};
  TrigonProfile p;
  p.trigon = t;
  for (int i = 0; i < 3; ++i) {
    Vertex vj = v[(i + 1) % 3], vk = v[(i + 2) % 3];
    p.c[i] = dr.edge_crossings(g.edge_id(vj, vk));
    const auto& rot = dr.vertex_rotations().at(v[i]);
    auto arc = detail::rot_arc(rot, g.edge_id(v[i], vj), g.edge_id(v[i], vk));
    p.m[i][0] = int(arc.size());
    p.m[i][1] = g.degree(v[i]) - 2 - p.m[i][0];
    p.d[i] = std::min(p.m[i][0], p.m[i][1]);
  }
  p.c_star = dr.crossing_count() - p.c[0] - p.c[1] - p.c[2];
  return p;
}

// Smallest apex index i with c_i > min(m_i1, m_i2), or (false, -1).
inline std::pair<bool, int> is_cr_reducible(const Drawing& dr, const Triangle& t) {
  TrigonProfile p = trigon_profile(dr, t);
  for (int i = 0; i < 3; ++i)
    if (p.c[i] > p.d[i]) return {true, i};
  return {false, -1};
}

// Rewires the drawing along the trigon-to-star move on t. apex in
// {0,1,2} picks v_apex (the erased edge is the one opposite it), side
// in {0,1} picks the rotation arc at the apex that the third strand
// sweeps across. The result is a validated drawing of delta_y(base, t)
// with exactly m[apex][side] + c_j + c_k + c_star crossings.
inline Drawing delta_y_surgery(const Drawing& dr, const Triangle& t, int apex, int side) {
  if (apex < 0 || apex > 2 || side < 0 || side > 1)
    throw error("delta_y_surgery: apex must be in {0,1,2} and side in {0,1}");
  if (!dr.is_good()) throw error("delta_y_surgery: drawing is not good");
  const Graph& g = dr.base();
  if (!is_triangle_of(g, t))
    throw error("delta_y_surgery: not a triangle of the base graph");

  std::array<Vertex, 3> v{t.a, t.b, t.c};
  Vertex A = v[apex], J = v[(apex + 1) % 3], K = v[(apex + 2) % 3];
  int eAJ = g.edge_id(A, J), eAK = g.edge_id(A, K), eJK = g.edge_id(J, K);

  auto [h, step] = delta_y(g, t);
  Vertex w = step.center;
  int f1 = h.edge_id(A, w), f2 = h.edge_id(w, J), f3 = h.edge_id(w, K);

  // Old edge id -> new edge id; the three trigon edges map to -1.
  std::vector<int> emap(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == eAJ || e == eAK || e == eJK) continue;
    const Edge& ed = g.edges()[e];
    emap[e] = h.edge_id(ed.u, ed.v);
  }

  // Strand roles. The "hug" strand only inherits its wall's route; the
  // "mix" strand first sweeps the chosen arc, then inherits the other
  // wall. Side 0 sweeps the arc after the dart toward J, so there the
  // sweeping strand is the one ending at K.
  const auto& arot = dr.vertex_rotations().at(A);
  std::vector<int> arc = side == 0 ? detail::rot_arc(arot, eAJ, eAK)
                                   : detail::rot_arc(arot, eAK, eAJ);
  int hug_old = side == 0 ? eAJ : eAK;
  int hug_new = side == 0 ? f2 : f3;
  Vertex hug_far = side == 0 ? J : K;
  int mix_old = side == 0 ? eAK : eAJ;
  int mix_new = side == 0 ? f3 : f2;
  Vertex mix_far = side == 0 ? K : J;

  // Crossings: survivors (everything off the erased edge) first, then
  // one fresh crossing per arc edge in sweep order.
  const auto& ocross = dr.crossings();
  std::vector<int> cmap(ocross.size(), -1);
  std::vector<CrossingRef> ncross;
  std::vector<std::array<CrossDart, 4>> ncrot;

  auto map_edge = [&](int e) {
    if (e == hug_old) return hug_new;
    if (e == mix_old) return mix_new;
    return emap[e];
  };
  auto map_dart = [&](const CrossDart& cd) {
    if (cd.edge == hug_old || cd.edge == mix_old) {
      Vertex far = cd.edge == hug_old ? hug_far : mix_far;
      bool toward_far = cd.toward_hi == (far > A);
      return CrossDart{cd.edge == hug_old ? hug_new : mix_new, toward_far == (far > w)};
    }
    return CrossDart{emap[cd.edge], cd.toward_hi};
  };

  for (int ci = 0; ci < int(ocross.size()); ++ci) {
    if (ocross[ci].edge_a == eJK || ocross[ci].edge_b == eJK) continue;
    cmap[ci] = int(ncross.size());
    int na = map_edge(ocross[ci].edge_a), nb = map_edge(ocross[ci].edge_b);
    ncross.push_back({std::min(na, nb), std::max(na, nb)});
    const auto& orot = dr.crossing_rotations()[ci];
    ncrot.push_back({map_dart(orot[0]), map_dart(orot[1]), map_dart(orot[2]),
                     map_dart(orot[3])});
  }

  std::vector<int> corner_idx;
  for (int x : arc) {
    int nx = emap[x];
    corner_idx.push_back(int(ncross.size()));
    ncross.push_back({std::min(mix_new, nx), std::max(mix_new, nx)});
    const Edge& xe = g.edges()[x];
    Vertex far_x = xe.u == A ? xe.v : xe.u;
    CrossDart x_away{nx, far_x > A};
    CrossDart x_back{nx, !(far_x > A)};
    CrossDart s_fwd{mix_new, mix_far > w};
    CrossDart s_back{mix_new, !(mix_far > w)};
    // Sweep runs in rotation direction: locally the arc edge points
    // away from the apex and the strand crosses it left to right.
    ncrot.push_back({x_away, s_fwd, x_back, s_back});
  }

  // Sequences. Helper: a wall's surviving crossings ordered from the
  // apex end outward.
  auto wall_from_apex = [&](int wall) {
    std::vector<int> out;
    const auto& seq = dr.edge_sequence(wall);
    const Edge& we = g.edges()[wall];
    if (we.u == A)
      for (int ci : seq) out.push_back(cmap[ci]);
    else
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(cmap[*it]);
    return out;
  };
  auto oriented = [&](std::vector<int> from_w, Vertex far) {
    if (far < w) std::reverse(from_w.begin(), from_w.end());
    return from_w;
  };

  std::vector<std::vector<int>> nseq(h.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (emap[e] < 0) continue;
    std::vector<int>& out = nseq[emap[e]];
    for (int ci : dr.edge_sequence(e))
      if (cmap[ci] >= 0) out.push_back(cmap[ci]);
  }
  for (int i = 0; i < int(arc.size()); ++i) {
    // The fresh crossing sits between the apex and everything else on
    // that edge.
    const Edge& xe = g.edges()[arc[i]];
    std::vector<int>& out = nseq[emap[arc[i]]];
    if (xe.u == A) out.insert(out.begin(), corner_idx[i]);
    else out.push_back(corner_idx[i]);
  }
  nseq[f1] = {};
  nseq[hug_new] = oriented(wall_from_apex(hug_old), hug_far);
  {
    std::vector<int> from_w = corner_idx;
    for (int ci : wall_from_apex(mix_old)) from_w.push_back(ci);
    nseq[mix_new] = oriented(std::move(from_w), mix_far);
  }

  // Rotations. At the apex the hugged wall's slot becomes the spoke to
  // w and the other wall's slot disappears; at J and K the wall slot
  // becomes the inheriting strand and the erased edge's slot goes.
  std::map<Vertex, std::vector<int>> nvrot;
  for (const auto& [vert, rot] : dr.vertex_rotations()) {
    std::vector<int> out;
    for (int e : rot) {
      if (vert == A && e == hug_old) out.push_back(f1);
      else if (vert == A && e == mix_old) continue;
      else if ((vert == J || vert == K) && e == eJK) continue;
      else if (vert == J && e == eAJ) out.push_back(f2);
      else if (vert == K && e == eAK) out.push_back(f3);
      else out.push_back(emap[e]);
    }
    nvrot[vert] = std::move(out);
  }
  nvrot[w] = side == 0 ? std::vector<int>{f1, f2, f3} : std::vector<int>{f1, f3, f2};

  return Drawing::build(std::move(h), std::move(ncross), std::move(nseq), std::move(nvrot),
                        std::move(ncrot));
}

// Minimizes the surgery count over the six apex/side choices; first
// minimum wins. When the trigon is cr-reducible the count is strictly
// below crossing_count(dr).
inline std::pair<Drawing, int> best_surgery(const Drawing& dr, const Triangle& t) {
  TrigonProfile p = trigon_profile(dr, t);
  int best_apex = 0, best_side = 0, best = -1;
  for (int apex = 0; apex < 3; ++apex) {
    int cj = p.c[(apex + 1) % 3], ck = p.c[(apex + 2) % 3];
    for (int side = 0; side < 2; ++side) {
      int count = p.m[apex][side] + cj + ck + p.c_star;
      if (best < 0 || count < best) {
        best = count;
        best_apex = apex;
        best_side = side;
      }
    }
  }
  Drawing out = delta_y_surgery(dr, t, best_apex, best_side);
  if (out.crossing_count() != best)
    throw error("best_surgery: constructed count disagrees with the profile formula");
  return {std::move(out), best};
}

} // namespace xing
