#pragma once

// Delta-wye and wye-delta moves. delta_y replaces the three edges of a
// triangle by a new degree-3 vertex joined to its corners; y_delta is
// the inverse on a degree-3 vertex. Wye-delta stays inside simple
// graphs: a triangle edge that already exists is merged and counted in
// simplified_edges (dropping parallel edges never changes the crossing
// number).

#include <utility>

#include "xing/graph.hpp"

namespace xing {

enum class MoveKind { delta_y, y_delta };

struct MoveStep {
  MoveKind kind = MoveKind::delta_y;
  Triangle site;            // the triangle replaced (delta_y) or formed (y_delta)
  Vertex center = -1;       // vertex created (delta_y) or removed (y_delta)
  int simplified_edges = 0; // parallel edges merged by y_delta
};

inline std::pair<Graph, MoveStep> delta_y(const Graph& g, const Triangle& t) {
  if (!is_triangle_of(g, t))
    throw error("delta_y: {" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                std::to_string(t.c) + "} is not a triangle of the graph");
  Graph h = g;
  Vertex w = h.fresh_vertex();
  h.remove_edge(t.a, t.b);
  h.remove_edge(t.a, t.c);
  h.remove_edge(t.b, t.c);
  h.add_edge(w, t.a);
  h.add_edge(w, t.b);
  h.add_edge(w, t.c);
  return {std::move(h), MoveStep{MoveKind::delta_y, t, w, 0}};
}

inline std::pair<Graph, MoveStep> y_delta(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw error("y_delta: no vertex " + std::to_string(v));
  auto nbrs = g.neighbors(v);
  if (nbrs.size() != 3)
    throw error("y_delta: vertex " + std::to_string(v) + " has degree " +
                std::to_string(nbrs.size()) + ", need 3");
  Graph h = g;
  h.remove_vertex(v);
  MoveStep step{MoveKind::y_delta, make_triangle(nbrs[0], nbrs[1], nbrs[2]), v, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (h.adjacent(nbrs[i], nbrs[j])) ++step.simplified_edges;
      else h.add_edge(nbrs[i], nbrs[j]);
    }
  return {std::move(h), step};
}

} // namespace xing
