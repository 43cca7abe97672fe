#pragma once

// Spherical drawings as planarized combinatorial maps. A drawing of a
// graph records the crossings (ordered pairs of edge ids), the order
// of crossings along each edge (read from the lower-id endpoint), and
// the cyclic rotation of edge-segments around every vertex and every
// crossing point. Validation traces faces of the planarization and
// requires every connected component to satisfy V - E + F = 2, i.e.
// the map really lives on a sphere.
//
// Crossing points are transversal double points: exactly two edges
// meet, and their four darts must alternate in the rotation. A record
// pairing an edge with itself is rejected outright; the goodness
// report's no-self-crossing clause is therefore structural.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xing/graph.hpp"

namespace xing {

struct CrossingRef {
  int edge_a = -1, edge_b = -1; // edge ids, normalized edge_a < edge_b
  friend bool operator==(const CrossingRef&, const CrossingRef&) = default;
};

struct CrossDart {
  int edge = -1;
  bool toward_hi = false; // segment leading toward the higher-id endpoint
  friend bool operator==(const CrossDart&, const CrossDart&) = default;
};

// The planarization: crossings become degree-4 nodes, edges become
// chains of segments. Node ids: 0..n-1 are vertex positions in
// base.vertices(), n..n+c-1 are crossings. Darts are 2*segment+dir
// where dir 0 starts at segments[s].first.
struct PlanarMap {
  int real_nodes = 0;
  int node_count = 0;
  std::vector<std::pair<int, int>> segments; // ordered along the edge, lo to hi
  std::vector<int> segment_edge;             // original edge id
  std::vector<std::vector<int>> segments_of_edge;
  std::vector<std::vector<int>> rotation; // darts in cyclic order, per node

  [[nodiscard]] int origin(int dart) const {
    return dart & 1 ? segments[dart >> 1].second : segments[dart >> 1].first;
  }
  [[nodiscard]] int head(int dart) const { return origin(dart ^ 1); }

  // Faces as orbits of dart -> rotation-successor of the reversed dart.
  [[nodiscard]] std::vector<std::vector<int>> faces() const {
    int nd = int(segments.size()) * 2;
    std::vector<std::pair<int, int>> pos(nd, {-1, -1}); // node, index in rotation
    for (int node = 0; node < node_count; ++node)
      for (int i = 0; i < int(rotation[node].size()); ++i)
        pos[rotation[node][i]] = {node, i};
    std::vector<std::vector<int>> out;
    std::vector<char> seen(nd, 0);
    for (int d0 = 0; d0 < nd; ++d0) {
      if (seen[d0]) continue;
      std::vector<int> face;
      int d = d0;
      do {
        seen[d] = 1;
        face.push_back(d);
        int r = d ^ 1;
        auto [node, i] = pos[r];
        const auto& rot = rotation[node];
        d = rot[(i + 1) % rot.size()];
      } while (d != d0);
      out.push_back(std::move(face));
    }
    return out;
  }
};

struct GoodnessReport {
  bool good = false;
  bool self_crossing_free = true;          // structural: such records cannot be built
  std::vector<int> adjacent_edge_crossings; // crossing indices violating (G2)
  std::vector<CrossingRef> repeated_pairs;  // edge pairs crossing more than once (G3)
};

class Drawing {
public:
  Drawing() = default;

  static Drawing build(Graph base, std::vector<CrossingRef> crossings,
                       std::vector<std::vector<int>> edge_seq,
                       std::map<Vertex, std::vector<int>> vertex_rot,
                       std::vector<std::array<CrossDart, 4>> crossing_rot) {
    Drawing d;
    d.base_ = std::move(base);
    d.crossings_ = std::move(crossings);
    d.edge_seq_ = std::move(edge_seq);
    d.vertex_rot_ = std::move(vertex_rot);
    d.crossing_rot_ = std::move(crossing_rot);
    d.validate();
    return d;
  }

  [[nodiscard]] const Graph& base() const { return base_; }
  [[nodiscard]] const std::vector<CrossingRef>& crossings() const { return crossings_; }
  [[nodiscard]] const std::vector<int>& edge_sequence(int edge) const {
    return edge_seq_.at(edge);
  }
  [[nodiscard]] const std::map<Vertex, std::vector<int>>& vertex_rotations() const {
    return vertex_rot_;
  }
  [[nodiscard]] const std::vector<std::array<CrossDart, 4>>& crossing_rotations() const {
    return crossing_rot_;
  }

  [[nodiscard]] int crossing_count() const { return int(crossings_.size()); }
  [[nodiscard]] int edge_crossings(int edge) const { return int(edge_seq_.at(edge).size()); }
  [[nodiscard]] int face_count() const { return face_count_; }

  // Crossings with one edge in s and the other in t; the sets must be
  // disjoint.
  [[nodiscard]] int pair_crossings(std::span<const int> s, std::span<const int> t) const {
    std::set<int> in_s(s.begin(), s.end()), in_t(t.begin(), t.end());
    for (int e : in_s)
      if (in_t.count(e)) throw error("pair_crossings: edge sets overlap");
    int count = 0;
    for (const CrossingRef& c : crossings_) {
      bool a_s = in_s.count(c.edge_a), a_t = in_t.count(c.edge_a);
      bool b_s = in_s.count(c.edge_b), b_t = in_t.count(c.edge_b);
      count += (a_s && b_t) || (a_t && b_s);
    }
    return count;
  }

  [[nodiscard]] GoodnessReport goodness() const {
    GoodnessReport r;
    for (int i = 0; i < int(crossings_.size()); ++i) {
      const Edge& ea = base_.edges()[crossings_[i].edge_a];
      const Edge& eb = base_.edges()[crossings_[i].edge_b];
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
        r.adjacent_edge_crossings.push_back(i);
    }
    std::map<std::pair<int, int>, int> seen;
    for (const CrossingRef& c : crossings_) ++seen[{c.edge_a, c.edge_b}];
    for (const auto& [pair, count] : seen)
      if (count > 1) r.repeated_pairs.push_back({pair.first, pair.second});
    r.good = r.adjacent_edge_crossings.empty() && r.repeated_pairs.empty();
    return r;
  }

  [[nodiscard]] bool is_good() const { return goodness().good; }

  [[nodiscard]] PlanarMap planarization() const {
    PlanarMap m;
    int n = base_.vertex_count();
    m.real_nodes = n;
    m.node_count = n + int(crossings_.size());
    m.rotation.resize(m.node_count);
    m.segments_of_edge.resize(base_.edge_count());

    // Chains of segments, one per edge.
    for (int e = 0; e < base_.edge_count(); ++e) {
      const Edge& ed = base_.edges()[e];
      int prev = base_.index_of(ed.u);
      for (int ci : edge_seq_[e]) {
        int node = n + ci;
        m.segments_of_edge[e].push_back(int(m.segments.size()));
        m.segments.emplace_back(prev, node);
        m.segment_edge.push_back(e);
        prev = node;
      }
      m.segments_of_edge[e].push_back(int(m.segments.size()));
      m.segments.emplace_back(prev, base_.index_of(ed.v));
      m.segment_edge.push_back(e);
    }

    // Rotations at real vertices: one end segment per incident edge.
    for (const auto& [v, edges] : vertex_rot_) {
      int node = base_.index_of(v);
      for (int e : edges) {
        const Edge& ed = base_.edges()[e];
        const auto& segs = m.segments_of_edge[e];
        int dart = (v == ed.u) ? segs.front() * 2 : segs.back() * 2 + 1;
        m.rotation[node].push_back(dart);
      }
    }

    // Rotations at crossings: resolve (edge, side) darts via the
    // position of the crossing in that edge's sequence.
    for (int ci = 0; ci < int(crossings_.size()); ++ci) {
      int node = n + ci;
      for (const CrossDart& cd : crossing_rot_[ci]) {
        const auto& seq = edge_seq_[cd.edge];
        int p = -1;
        for (int i = 0; i < int(seq.size()); ++i)
          if (seq[i] == ci) p = i;
        assert(p >= 0); // guaranteed by validate()
        const auto& segs = m.segments_of_edge[cd.edge];
        int dart = cd.toward_hi ? segs[p + 1] * 2 : segs[p] * 2 + 1;
        m.rotation[node].push_back(dart);
      }
    }
    return m;
  }

private:
  void validate() {
    int mEdges = base_.edge_count();
    if (int(edge_seq_.size()) != mEdges)
      throw error("drawing: edge sequence table has wrong size");
    if (crossing_rot_.size() != crossings_.size())
      throw error("drawing: crossing rotation table has wrong size");

    for (auto& c : crossings_) {
      if (c.edge_a > c.edge_b) std::swap(c.edge_a, c.edge_b);
      if (c.edge_a < 0 || c.edge_b >= mEdges)
        throw error("drawing: crossing references edge out of range");
      if (c.edge_a == c.edge_b)
        throw error("drawing: self-crossing records are not representable");
    }

    // Every crossing appears exactly once in each of its two edges'
    // sequences and nowhere else.
    std::vector<std::array<int, 2>> appear(crossings_.size(), {0, 0});
    for (int e = 0; e < mEdges; ++e)
      for (int ci : edge_seq_[e]) {
        if (ci < 0 || ci >= int(crossings_.size()))
          throw error("drawing: dangling crossing index in edge sequence");
        if (crossings_[ci].edge_a == e) ++appear[ci][0];
        else if (crossings_[ci].edge_b == e) ++appear[ci][1];
        else
          throw error("drawing: crossing " + std::to_string(ci) +
                      " listed on an unrelated edge");
      }
    for (size_t ci = 0; ci < appear.size(); ++ci)
      if (appear[ci][0] != 1 || appear[ci][1] != 1)
        throw error("drawing: crossing " + std::to_string(ci) +
                    " must appear exactly once on each of its edges");

    // Vertex rotations: exactly the incident edges, each once.
    for (const auto& [v, edges] : vertex_rot_)
      if (!base_.has_vertex(v)) throw error("drawing: rotation for unknown vertex");
    for (Vertex v : base_.vertices()) {
      auto it = vertex_rot_.find(v);
      if (it == vertex_rot_.end()) {
        if (base_.degree(v) != 0)
          throw error("drawing: missing rotation at vertex " + std::to_string(v));
        vertex_rot_[v] = {};
        continue;
      }
      std::vector<int> got = it->second;
      std::sort(got.begin(), got.end());
      std::vector<int> want;
      for (int e = 0; e < mEdges; ++e) {
        const Edge& ed = base_.edges()[e];
        if (ed.u == v || ed.v == v) want.push_back(e);
      }
      if (got != want)
        throw error("drawing: rotation at vertex " + std::to_string(v) +
                    " does not list the incident edges exactly once");
    }

    // Crossing rotations: the four darts of the two edges, alternating.
    for (int ci = 0; ci < int(crossings_.size()); ++ci) {
      const auto& rot = crossing_rot_[ci];
      int a = crossings_[ci].edge_a, b = crossings_[ci].edge_b;
      std::set<std::pair<int, int>> darts;
      for (const CrossDart& cd : rot) darts.insert({cd.edge, cd.toward_hi});
      if (darts != std::set<std::pair<int, int>>{{a, 0}, {a, 1}, {b, 0}, {b, 1}})
        throw error("drawing: crossing " + std::to_string(ci) +
                    " rotation must hold both darts of both edges");
      if (rot[0].edge == rot[1].edge || rot[1].edge == rot[2].edge ||
          rot[2].edge == rot[3].edge)
        throw error("drawing: crossing " + std::to_string(ci) +
                    " is not transversal (darts do not alternate)");
    }

    // Face tracing: each component of the planarization must be a
    // genus-0 map.
    PlanarMap m = planarization();
    std::vector<int> rep(m.node_count);
    for (int i = 0; i < m.node_count; ++i) rep[i] = i;
    auto find = [&](int x) {
      while (rep[x] != x) x = rep[x] = rep[rep[x]];
      return x;
    };
    for (auto [a, b] : m.segments) rep[find(a)] = find(b);

    std::map<int, std::array<long, 3>> vef; // component -> V, E, F
    for (int i = 0; i < m.node_count; ++i) ++vef[find(i)][0];
    for (auto [a, b] : m.segments) ++vef[find(a)][1];
    auto faces = m.faces();
    for (const auto& f : faces) ++vef[find(m.origin(f[0]))][2];
    face_count_ = 0;
    for (auto& [root, c] : vef) {
      if (c[1] == 0 && c[0] == 1) c[2] = 1; // isolated vertex: one face
      face_count_ += int(c[2]);
      if (c[0] - c[1] + c[2] != 2)
        throw error("drawing: rotation system has genus != 0 (component V=" +
                    std::to_string(c[0]) + " E=" + std::to_string(c[1]) +
                    " F=" + std::to_string(c[2]) + ")");
    }
  }

  Graph base_;
  std::vector<CrossingRef> crossings_;
  std::vector<std::vector<int>> edge_seq_;
  std::map<Vertex, std::vector<int>> vertex_rot_;
  std::vector<std::array<CrossDart, 4>> crossing_rot_;
  int face_count_ = 0;
};

// Straight-chord drawing with all vertices in convex position (slightly
// jittered circle, id order). Always valid and always good: chords
// cross at most once and adjacent chords never cross. Useful both as a
// universal fallback drawing and as an independently constructed test
// subject, e.g. crossing_count(convex_drawing(K_n)) = C(n,4).
inline Drawing convex_drawing(const Graph& g) {
  int n = g.vertex_count();
  const auto& vs = g.vertices();
  int mEdges = g.edge_count();

  for (int attempt = 0; attempt < 32; ++attempt) {
    double wobble = 0.03 + 0.11 * attempt;
    std::vector<double> px(n), py(n);
    for (int i = 0; i < n; ++i) {
      double angle = 2.0 * M_PI * i / std::max(n, 1) + wobble * std::sin(7.31 * i + 1.0);
      px[i] = std::cos(angle);
      py[i] = std::sin(angle);
    }

    // Chord intersections, each annotated with its parameter along the
    // edge measured from the lo endpoint.
    std::vector<CrossingRef> crossings;
    std::vector<std::vector<std::pair<double, int>>> along(mEdges);
    bool degenerate = false;
    for (int e = 0; e < mEdges && !degenerate; ++e)
      for (int f = e + 1; f < mEdges && !degenerate; ++f) {
        const Edge& a = g.edges()[e];
        const Edge& b = g.edges()[f];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
        int ai = g.index_of(a.u), aj = g.index_of(a.v);
        int bi = g.index_of(b.u), bj = g.index_of(b.v);
        double r1x = px[aj] - px[ai], r1y = py[aj] - py[ai];
        double r2x = px[bj] - px[bi], r2y = py[bj] - py[bi];
        double den = r1x * r2y - r1y * r2x;
        if (std::abs(den) < 1e-12) continue;
        double qx = px[bi] - px[ai], qy = py[bi] - py[ai];
        double t = (qx * r2y - qy * r2x) / den;
        double u = (qx * r1y - qy * r1x) / den;
        if (t <= 1e-9 || t >= 1 - 1e-9 || u <= 1e-9 || u >= 1 - 1e-9) {
          if (t > -1e-9 && t < 1 + 1e-9 && u > -1e-9 && u < 1 + 1e-9) degenerate = true;
          continue;
        }
        int ci = int(crossings.size());
        crossings.push_back({e, f});
        along[e].push_back({t, ci});
        along[f].push_back({u, ci});
      }
    if (degenerate) continue;

    std::vector<std::vector<int>> seq(mEdges);
    bool collision = false;
    for (int e = 0; e < mEdges; ++e) {
      std::sort(along[e].begin(), along[e].end());
      for (size_t i = 0; i + 1 < along[e].size(); ++i)
        if (along[e][i + 1].first - along[e][i].first < 1e-9) collision = true;
      for (auto& [t, ci] : along[e]) seq[e].push_back(ci);
    }
    if (collision) continue;

    // Rotations by geometric angle (counterclockwise).
    auto point_of_crossing = [&](int ci) {
      const Edge& a = g.edges()[crossings[ci].edge_a];
      int ai = g.index_of(a.u), aj = g.index_of(a.v);
      double t = 0;
      for (auto& [tt, c] : along[crossings[ci].edge_a])
        if (c == ci) t = tt;
      return std::pair<double, double>{px[ai] + t * (px[aj] - px[ai]),
                                       py[ai] + t * (py[aj] - py[ai])};
    };
    std::map<Vertex, std::vector<int>> vrot;
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<double, int>> order;
      for (int e = 0; e < mEdges; ++e) {
        const Edge& ed = g.edges()[e];
        if (ed.u != vs[i] && ed.v != vs[i]) continue;
        // Direction toward the first stop along the edge from this end.
        double tx, ty;
        const auto& s = seq[e];
        bool from_lo = (ed.u == vs[i]);
        if (s.empty()) {
          int o = g.index_of(from_lo ? ed.v : ed.u);
          tx = px[o];
          ty = py[o];
        } else {
          auto [cx, cy] = point_of_crossing(from_lo ? s.front() : s.back());
          tx = cx;
          ty = cy;
        }
        order.push_back({std::atan2(ty - py[i], tx - px[i]), e});
      }
      std::sort(order.begin(), order.end());
      auto& rot = vrot[vs[i]];
      for (auto& [ang, e] : order) rot.push_back(e);
    }
    std::vector<std::array<CrossDart, 4>> crot;
    for (int ci = 0; ci < int(crossings.size()); ++ci) {
      auto [cx, cy] = point_of_crossing(ci);
      std::vector<std::pair<double, CrossDart>> order;
      for (int which = 0; which < 2; ++which) {
        int e = which ? crossings[ci].edge_b : crossings[ci].edge_a;
        const Edge& ed = g.edges()[e];
        const auto& s = seq[e];
        int p = -1;
        for (int i = 0; i < int(s.size()); ++i)
          if (s[i] == ci) p = i;
        for (int hi = 0; hi < 2; ++hi) {
          // Neighbor point in that direction: previous/next crossing or
          // the endpoint.
          double tx, ty;
          int q = hi ? p + 1 : p - 1;
          if (q >= 0 && q < int(s.size())) {
            auto [ox, oy] = point_of_crossing(s[q]);
            tx = ox;
            ty = oy;
          } else {
            int o = g.index_of(hi ? ed.v : ed.u);
            tx = px[o];
            ty = py[o];
          }
          order.push_back({std::atan2(ty - cy, tx - cx), CrossDart{e, hi == 1}});
        }
      }
      std::sort(order.begin(), order.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::array<CrossDart, 4> rot{order[0].second, order[1].second, order[2].second,
                                   order[3].second};
      crot.push_back(rot);
    }
    return Drawing::build(g, std::move(crossings), std::move(seq), std::move(vrot),
                          std::move(crot));
  }
  throw error("convex_drawing: could not reach general position");
}

} // namespace xing
