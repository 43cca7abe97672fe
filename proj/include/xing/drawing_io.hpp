#pragma once

// Drawing text format, round-trip exact.
//
//   drawing v1
//   graph
//   0 1                 (edge-list section, same syntax as graph files)
//   ...
//   crossing 0 2 9      (crossing index, then the two edge ids)
//   order 2 0 1         (crossing indices along edge 2, from the lower
//                        endpoint; edges without crossings are omitted)
//   rot 0 0 3 4         (cyclic edge order around vertex 0)
//   rot x0 2+ 9- 2- 9+  (cyclic darts around crossing 0; e+ heads toward
//                        the higher endpoint of edge e, e- toward the lower)
//
// serialize_drawing is canonical: crossings and rotations in index
// order, no empty lines. parse_drawing feeds Drawing::build, so every
// parsed drawing is validated.

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "xing/drawing.hpp"
#include "xing/graph_io.hpp"

namespace xing {

inline std::string serialize_drawing(const Drawing& d) {
  std::ostringstream out;
  out << "drawing v1\n";
  out << "graph\n";
  out << serialize_edge_list(d.base());
  for (int i = 0; i < d.crossing_count(); ++i)
    out << "crossing " << i << " " << d.crossings()[i].edge_a << " "
        << d.crossings()[i].edge_b << "\n";
  for (int e = 0; e < d.base().edge_count(); ++e) {
    const auto& seq = d.edge_sequence(e);
    if (seq.empty()) continue;
    out << "order " << e;
    for (int ci : seq) out << " " << ci;
    out << "\n";
  }
  for (const auto& [v, rot] : d.vertex_rotations()) {
    if (rot.empty()) continue;
    out << "rot " << v;
    for (int e : rot) out << " " << e;
    out << "\n";
  }
  for (int i = 0; i < d.crossing_count(); ++i) {
    out << "rot x" << i;
    for (const CrossDart& cd : d.crossing_rotations()[i])
      out << " " << cd.edge << (cd.toward_hi ? "+" : "-");
    out << "\n";
  }
  return out.str();
}

inline Drawing parse_drawing(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    return error("drawing line " + std::to_string(lineno) + ": " + why);
  };

  enum { expect_header, expect_graph, in_graph, in_tables } state = expect_header;
  std::ostringstream graph_text;
  struct OrderLine {
    int edge;
    std::vector<int> seq;
  };
  struct RotLine {
    std::string node;
    std::vector<std::string> items;
  };
  std::vector<std::array<int, 3>> crossing_lines; // idx, edge_a, edge_b
  std::vector<OrderLine> order_lines;
  std::vector<RotLine> rot_lines;

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    if (state == expect_header) {
      if (sv != "drawing v1") throw bad("expected 'drawing v1' header");
      state = expect_graph;
      continue;
    }
    if (state == expect_graph) {
      if (sv != "graph") throw bad("expected 'graph' section");
      state = in_graph;
      continue;
    }

    std::istringstream ls{std::string(sv)};
    std::string head;
    ls >> head;
    bool table_line = head == "crossing" || head == "order" || head == "rot";
    if (state == in_graph && !table_line) {
      graph_text << sv << "\n";
      continue;
    }
    if (!table_line) throw bad("unrecognized line '" + std::string(sv) + "'");
    state = in_tables;

    if (head == "crossing") {
      int idx = -1, a = -1, b = -1;
      if (!(ls >> idx >> a >> b) || idx < 0)
        throw bad("expected 'crossing <idx> <edge_a> <edge_b>'");
      std::string rest;
      if (ls >> rest) throw bad("trailing tokens");
      crossing_lines.push_back({idx, a, b});
    } else if (head == "order") {
      OrderLine ol;
      if (!(ls >> ol.edge)) throw bad("expected 'order <edge> <idx...>'");
      int ci;
      while (ls >> ci) ol.seq.push_back(ci);
      if (!ls.eof()) throw bad("malformed crossing index");
      if (ol.seq.empty()) throw bad("empty order line");
      order_lines.push_back(std::move(ol));
    } else {
      RotLine rl;
      if (!(ls >> rl.node)) throw bad("expected 'rot <vertex|x<idx>> <darts...>'");
      std::string item;
      while (ls >> item) rl.items.push_back(item);
      if (rl.items.empty()) throw bad("empty rotation line");
      rot_lines.push_back(std::move(rl));
    }
  }
  if (state == expect_header) throw error("drawing: missing 'drawing v1' header");
  if (state == expect_graph) throw error("drawing: missing 'graph' section");

  Graph g = parse_edge_list(graph_text.str());
  int m = g.edge_count();

  int nc = int(crossing_lines.size());
  std::vector<CrossingRef> crossings(nc);
  std::vector<char> seen(nc, 0);
  for (auto [idx, a, b] : crossing_lines) {
    if (idx >= nc || seen[idx])
      throw error("drawing: crossing indices must cover 0.." + std::to_string(nc - 1) +
                  " exactly once");
    seen[idx] = 1;
    crossings[idx] = {a, b};
  }

  std::vector<std::vector<int>> edge_seq(m);
  for (auto& ol : order_lines) {
    if (ol.edge < 0 || ol.edge >= m)
      throw error("drawing: order line for unknown edge " + std::to_string(ol.edge));
    if (!edge_seq[ol.edge].empty())
      throw error("drawing: repeated order line for edge " + std::to_string(ol.edge));
    edge_seq[ol.edge] = std::move(ol.seq);
  }

  std::map<Vertex, std::vector<int>> vertex_rot;
  std::vector<std::array<CrossDart, 4>> crossing_rot(nc);
  std::vector<char> rot_seen(nc, 0);
  for (auto& rl : rot_lines) {
    if (!rl.node.empty() && rl.node[0] == 'x') {
      int idx = -1;
      try {
        size_t used = 0;
        idx = std::stoi(rl.node.substr(1), &used);
        if (used + 1 != rl.node.size()) throw std::invalid_argument(rl.node);
      } catch (const std::exception&) {
        throw error("drawing: bad crossing rotation id '" + rl.node + "'");
      }
      if (idx < 0 || idx >= nc)
        throw error("drawing: rotation for unknown crossing " + rl.node);
      if (rot_seen[idx])
        throw error("drawing: repeated rotation for crossing " + rl.node);
      rot_seen[idx] = 1;
      if (rl.items.size() != 4)
        throw error("drawing: crossing rotation needs exactly 4 darts");
      for (int i = 0; i < 4; ++i) {
        std::string& item = rl.items[i];
        char dir = item.back();
        if (item.size() < 2 || (dir != '+' && dir != '-'))
          throw error("drawing: crossing dart must be <edge>+ or <edge>-, got '" +
                      item + "'");
        int e = -1;
        try {
          size_t used = 0;
          e = std::stoi(item, &used);
          if (used + 1 != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw error("drawing: bad edge id in dart '" + item + "'");
        }
        crossing_rot[idx][i] = {e, dir == '+'};
      }
    } else {
      long v = -1;
      try {
        size_t used = 0;
        v = std::stol(rl.node, &used);
        if (used != rl.node.size()) throw std::invalid_argument(rl.node);
      } catch (const std::exception&) {
        throw error("drawing: bad rotation id '" + rl.node + "'");
      }
      if (vertex_rot.count(Vertex(v)))
        throw error("drawing: repeated rotation for vertex " + rl.node);
      auto& rot = vertex_rot[Vertex(v)];
      for (std::string& item : rl.items) {
        try {
          size_t used = 0;
          rot.push_back(std::stoi(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw error("drawing: bad edge id '" + item + "' in vertex rotation");
        }
      }
    }
  }
  for (int i = 0; i < nc; ++i)
    if (!rot_seen[i])
      throw error("drawing: missing rotation for crossing x" + std::to_string(i));

  return Drawing::build(std::move(g), std::move(crossings), std::move(edge_seq),
                        std::move(vertex_rot), std::move(crossing_rot));
}

} // namespace xing
