#pragma once

// Straight-line coordinates for a drawing's planarization, plus SVG
// export. The planarization is augmented inside the faces of its own
// rotation system (connect components, biconnect across cut-vertex
// corners, triangulate every face) until it is a simple maximal planar
// map; chrobak_payne then places it on an integer grid. Augmentation
// edges are dropped from the output, so only real segments are drawn,
// but because every added edge respects the stored rotations, the
// picture realizes the drawing's own faces, and crossings keep their
// transversal look.
//
// Valid-but-not-good drawings can planarize to a multigraph (two edges
// crossing twice, or crossing while sharing an endpoint, produce
// parallel segments); such segments are subdivided with a bend node
// first, so a segment's polyline may have more than two points.

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "xing/drawing.hpp"

namespace xing {

struct DrawingLayout {
  // Positions of the planarization's nodes: base vertices first (in
  // base.vertices() order), then one node per crossing.
  std::vector<std::array<double, 2>> node_pos;
  // Polyline per planarization segment, from its lo-side node to its
  // hi-side node; two points unless the segment needed a bend.
  std::vector<std::vector<std::array<double, 2>>> segment_path;
};

namespace detail {

inline std::pair<int, int> seg_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Splits the face with corner (d1, d2) by a chord from origin(d1) to
// head(d2). The chord's forward dart goes right before d1 at its
// origin and the reverse dart right after d2^1 at its head, so only
// that one face is retraced; all other orbits survive untouched.
inline int add_chord(PlanarMap& work, std::set<std::pair<int, int>>& present, int d1,
                     int d2) {
  int x = work.origin(d1), y = work.head(d2);
  int s = int(work.segments.size());
  work.segments.emplace_back(x, y);
  auto& rx = work.rotation[x];
  rx.insert(std::find(rx.begin(), rx.end(), d1), 2 * s);
  auto& ry = work.rotation[y];
  auto it = std::find(ry.begin(), ry.end(), d2 ^ 1);
  ry.insert(std::next(it), 2 * s + 1);
  present.insert(seg_key(x, y));
  return s;
}

inline std::vector<int> segment_bicomps(const PlanarMap& work) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::no_property,
                                   boost::property<boost::edge_index_t, int>>;
  BG bg(work.node_count);
  for (int s = 0; s < int(work.segments.size()); ++s)
    boost::add_edge(work.segments[s].first, work.segments[s].second, s, bg);
  std::vector<int> comp(work.segments.size(), -1);
  boost::biconnected_components(
      bg, boost::make_iterator_property_map(comp.begin(),
                                            boost::get(boost::edge_index, bg)));
  return comp;
}

} // namespace detail

inline DrawingLayout layout(const Drawing& d) {
  PlanarMap m = d.planarization();
  DrawingLayout out;
  if (m.node_count == 0) return out;

  // Working copy; parallel segments get a bend node to keep the
  // augmented graph simple.
  PlanarMap work = m;
  std::set<std::pair<int, int>> present;
  std::vector<std::vector<int>> chain(m.segments.size());
  for (int s = 0; s < int(m.segments.size()); ++s) {
    auto [a, b] = work.segments[s];
    if (present.insert(detail::seg_key(a, b)).second) {
      chain[s] = {s};
      continue;
    }
    int mid = work.node_count++;
    int snew = int(work.segments.size());
    work.segments[s] = {a, mid};
    work.segments.emplace_back(mid, b);
    for (int& dart : work.rotation[b])
      if (dart == 2 * s + 1) dart = 2 * snew + 1;
    work.rotation.push_back({2 * s + 1, 2 * snew});
    present.insert(detail::seg_key(a, mid));
    present.insert(detail::seg_key(mid, b));
    chain[s] = {s, snew};
  }

  // Connect components. A new bridge merges one face of each side, so
  // any rotation slot at each endpoint is sound.
  {
    std::vector<int> rep(work.node_count);
    for (int i = 0; i < work.node_count; ++i) rep[i] = i;
    auto find = [&](int v) {
      while (rep[v] != v) v = rep[v] = rep[rep[v]];
      return v;
    };
    for (auto [a, b] : work.segments) rep[find(a)] = find(b);
    int anchor = -1;
    for (int v = 0; v < work.node_count; ++v) {
      if (find(v) != v) continue;
      if (anchor < 0) {
        anchor = v;
        continue;
      }
      int s = int(work.segments.size());
      work.segments.emplace_back(anchor, v);
      work.rotation[anchor].push_back(2 * s);
      work.rotation[v].push_back(2 * s + 1);
      present.insert(detail::seg_key(anchor, v));
      rep[v] = anchor;
    }
  }

  if (work.node_count == 1) {
    out.node_pos = {{0.0, 0.0}};
    return out;
  }
  if (work.node_count == 2) {
    out.node_pos = {{0.0, 0.0}, {1.0, 0.0}};
    for (auto& c : chain) {
      std::vector<std::array<double, 2>> path;
      path.push_back(out.node_pos[work.segments[c.front()].first]);
      path.push_back(out.node_pos[work.segments[c.back()].second]);
      out.segment_path.push_back(std::move(path));
    }
    return out;
  }

  // Biconnect: whenever two consecutive face darts lie in different
  // biconnected components, shortcut their corner. At a cut vertex some
  // corner always qualifies, and the endpoints can be neither equal nor
  // already adjacent (a triangle through the corner would merge the
  // components), so the loop ends exactly when the map is biconnected.
  for (;;) {
    std::vector<int> bicomp = detail::segment_bicomps(work);
    bool added = false;
    for (const auto& face : work.faces()) {
      int len = int(face.size());
      for (int i = 0; i < len && !added; ++i) {
        int d1 = face[i], d2 = face[(i + 1) % len];
        if (bicomp[d1 >> 1] == bicomp[d2 >> 1]) continue;
        int x = work.origin(d1), y = work.head(d2);
        if (x == y || present.count(detail::seg_key(x, y))) continue;
        detail::add_chord(work, present, d1, d2);
        added = true;
      }
      if (added) break;
    }
    if (!added) break;
  }

  // Triangulate each face. Faces of a simple biconnected map are
  // simple cycles, and when the ear chord (v1,v3) already exists in
  // the graph the next ear (v2,v4) cannot, so this always finishes.
  for (const auto& face : work.faces()) {
    std::vector<int> f = face;
    while (f.size() > 3) {
      int v1 = work.origin(f[0]), v3 = work.head(f[1]);
      if (v1 != v3 && !present.count(detail::seg_key(v1, v3))) {
        int s = detail::add_chord(work, present, f[0], f[1]);
        f.erase(f.begin(), f.begin() + 2);
        f.insert(f.begin(), 2 * s);
      } else {
        int v2 = work.origin(f[1]), v4 = work.head(f[2]);
        if (v2 == v4 || present.count(detail::seg_key(v2, v4)))
          throw error("layout: face triangulation got stuck");
        int s = detail::add_chord(work, present, f[1], f[2]);
        f.erase(f.begin() + 1, f.begin() + 3);
        f.insert(f.begin() + 1, 2 * s);
      }
    }
  }
  if (int(work.segments.size()) != 3 * work.node_count - 6)
    throw error("layout: augmentation did not reach a maximal planar map");

  // Grid placement of the triangulation.
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::no_property,
                                   boost::property<boost::edge_index_t, int>>;
  BG bg(work.node_count);
  std::vector<boost::graph_traits<BG>::edge_descriptor> edesc;
  for (int s = 0; s < int(work.segments.size()); ++s)
    edesc.push_back(
        boost::add_edge(work.segments[s].first, work.segments[s].second, s, bg).first);
  std::vector<std::vector<boost::graph_traits<BG>::edge_descriptor>> emb(
      work.node_count);
  for (int v = 0; v < work.node_count; ++v)
    for (int dart : work.rotation[v]) emb[v].push_back(edesc[dart >> 1]);
  auto emb_map =
      boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg));
  std::vector<boost::graph_traits<BG>::vertex_descriptor> ordering;
  boost::planar_canonical_ordering(bg, emb_map, std::back_inserter(ordering));
  struct GridPoint {
    std::size_t x = 0, y = 0;
  };
  std::vector<GridPoint> grid(work.node_count);
  boost::chrobak_payne_straight_line_drawing(
      bg, emb_map, ordering.begin(), ordering.end(),
      boost::make_iterator_property_map(grid.begin(),
                                        boost::get(boost::vertex_index, bg)));

  for (int v = 0; v < m.node_count; ++v)
    out.node_pos.push_back({double(grid[v].x), double(grid[v].y)});
  for (int s = 0; s < int(m.segments.size()); ++s) {
    std::vector<std::array<double, 2>> path;
    path.push_back({double(grid[work.segments[chain[s].front()].first].x),
                    double(grid[work.segments[chain[s].front()].first].y)});
    for (int ws : chain[s])
      path.push_back({double(grid[work.segments[ws].second].x),
                      double(grid[work.segments[ws].second].y)});
    out.segment_path.push_back(std::move(path));
  }
  return out;
}

// Standalone SVG: one path per planarization segment, so crossings
// render as plain intersections; real vertices get labeled disks.
inline std::string render_svg(const Drawing& d) {
  DrawingLayout lay = layout(d);
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  bool first = true;
  auto see = [&](const std::array<double, 2>& p) {
    if (first) {
      lo_x = hi_x = p[0];
      lo_y = hi_y = p[1];
      first = false;
      return;
    }
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  };
  for (const auto& p : lay.node_pos) see(p);
  for (const auto& path : lay.segment_path)
    for (const auto& p : path) see(p);

  const double margin = 40, span = 720;
  double scale = span / std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  auto tx = [&](double x) { return margin + (x - lo_x) * scale; };
  // SVG's y axis grows downward; flip to keep the rotation sense.
  auto ty = [&](double y) { return margin + (hi_y - y) * scale; };
  double w = 2 * margin + (hi_x - lo_x) * scale;
  double h = 2 * margin + (hi_y - lo_y) * scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
      << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const auto& path : lay.segment_path) {
    svg << "<path d=\"";
    for (size_t i = 0; i < path.size(); ++i)
      svg << (i == 0 ? "M " : "L ") << tx(path[i][0]) << " " << ty(path[i][1]) << " ";
    svg << "\" fill=\"none\" stroke=\"#33466e\" stroke-width=\"2\"/>\n";
  }
  const auto& vs = d.base().vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i >= lay.node_pos.size()) break;
    double x = tx(lay.node_pos[i][0]), y = ty(lay.node_pos[i][1]);
    std::string text = d.base().label(vs[i]);
    if (text.empty()) text = std::to_string(vs[i]);
    svg << "<circle cx=\"" << x << "\" cy=\"" << y
        << "\" r=\"11\" fill=\"#f4b942\" stroke=\"#7a5b14\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << y + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << text << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace xing
