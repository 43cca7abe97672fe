#pragma once

// Edge-list text format.
//
//   # comment
//   vertex 7            (only needed for isolated vertices)
//   0 1                 (one edge per line, two decimal vertex ids)
//   label 0 hub
//
// Parsing is strict: unknown directives, malformed ids and duplicate
// edges are errors. serialize() is canonical, so a parse/serialize
// round trip reproduces the value exactly.

#include <sstream>
#include <string>

#include "xing/graph.hpp"

namespace xing {

inline Graph parse_edge_list(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    std::istringstream ls{std::string(sv)};
    std::string head;
    ls >> head;
    auto bad = [&](const std::string& why) {
      return error("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "vertex") {
      long id = -1;
      if (!(ls >> id) || id < 0) throw bad("expected 'vertex <id>'");
      std::string rest;
      if (ls >> rest) throw bad("trailing tokens");
      g.add_vertex(Vertex(id));
    } else if (head == "label") {
      long id = -1;
      if (!(ls >> id) || id < 0) throw bad("expected 'label <id> <text>'");
      std::string text;
      std::getline(ls, text);
      size_t pos = text.find_first_not_of(" \t");
      if (pos == std::string::npos) throw bad("empty label text");
      g.set_label(Vertex(id), text.substr(pos));
    } else {
      long a = -1, b = -1;
      try {
        size_t used = 0;
        a = std::stol(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
      } catch (const std::exception&) {
        throw bad("unrecognized line '" + std::string(sv) + "'");
      }
      if (!(ls >> b) || a < 0 || b < 0) throw bad("expected 'u v'");
      std::string rest;
      if (ls >> rest) throw bad("trailing tokens");
      try {
        g.add_edge(Vertex(a), Vertex(b));
      } catch (const error& e) {
        throw bad(e.what());
      }
    }
  }
  return g;
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) out << "vertex " << v << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  for (const auto& [v, text] : g.labels()) out << "label " << v << " " << text << "\n";
  return out.str();
}

} // namespace xing
