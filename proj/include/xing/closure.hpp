#pragma once

// Closure of a graph under delta-wye and wye-delta moves, with members
// deduplicated by canonical form. Breadth-first from the seed; every
// move applied to every member either lands on a known member or adds
// a new one, so the result is closed by construction.

#include <string>
#include <vector>

#include "xing/graph.hpp"
#include "xing/isomorphism.hpp"
#include "xing/moves.hpp"

namespace xing {

struct ClosureMember {
  Graph graph; // first representative reached
  std::string canon;
};

struct ClosureEdge {
  int from = 0, to = 0; // member indices
  MoveStep step;        // a move realizing the transition from members[from].graph
};

struct MoveClosure {
  std::vector<ClosureMember> members;
  std::vector<ClosureEdge> edges;

  [[nodiscard]] int find(const std::string& canon) const {
    for (int i = 0; i < int(members.size()); ++i)
      if (members[i].canon == canon) return i;
    return -1;
  }

  [[nodiscard]] int find(const Graph& g, int size_cap = kIsoSizeCap) const {
    return find(canonical_form(g, size_cap));
  }
};

inline MoveClosure move_closure(const Graph& seed, int max_members = 64,
                                int size_cap = kIsoSizeCap) {
  MoveClosure out;
  out.members.push_back({seed, canonical_form(seed, size_cap)});
  auto note_edge = [&](int from, int to, const MoveStep& step) {
    for (const ClosureEdge& e : out.edges)
      if (e.from == from && e.to == to && e.step.kind == step.kind) return;
    out.edges.push_back({from, to, step});
  };
  auto land = [&](int from, const Graph& h, const MoveStep& step) {
    std::string canon = canonical_form(h, size_cap);
    int to = out.find(canon);
    if (to < 0) {
      if (int(out.members.size()) >= max_members)
        throw error("move_closure: budget of " + std::to_string(max_members) +
                    " members exceeded");
      out.members.push_back({h, std::move(canon)});
      to = int(out.members.size()) - 1;
    }
    note_edge(from, to, step);
  };
  for (int i = 0; i < int(out.members.size()); ++i) {
    const Graph g = out.members[i].graph; // copy: members vector may grow
    for (const Triangle& t : triangles(g)) {
      auto [h, step] = delta_y(g, t);
      land(i, h, step);
    }
    for (Vertex v : g.vertices())
      if (g.degree(v) == 3) {
        auto [h, step] = y_delta(g, v);
        land(i, h, step);
      }
  }
  return out;
}

} // namespace xing
