#pragma once

// Simple undirected graphs on small nonnegative integer vertex ids.
// Values, not identities: everything here copies cheaply and compares
// by content. Edge ids are positions in the sorted edge list and stay
// stable as long as the graph is not mutated.

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xing {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Vertex = int;

struct Edge {
  Vertex u = 0, v = 0; // normalized: u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw error("loop edge " + std::to_string(a));
  if (a > b) std::swap(a, b);
  return Edge{a, b};
}

class Graph {
public:
  Graph() = default;

  void add_vertex(Vertex v) {
    if (v < 0) throw error("negative vertex id");
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) verts_.insert(it, v);
  }

  void add_edge(Vertex a, Vertex b) {
    Edge e = make_edge(a, b);
    add_vertex(e.u);
    add_vertex(e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
      throw error("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    edges_.insert(it, e);
  }

  void remove_edge(Vertex a, Vertex b) {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
      throw error("no such edge " + std::to_string(a) + "-" + std::to_string(b));
    edges_.erase(it);
  }

  // Removes v and all incident edges. The label, if any, goes too.
  void remove_vertex(Vertex v) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
      throw error("no such vertex " + std::to_string(v));
    verts_.erase(it);
    std::erase_if(edges_, [v](const Edge& e) { return e.u == v || e.v == v; });
    labels_.erase(v);
  }

  void set_label(Vertex v, std::string text) {
    add_vertex(v);
    labels_[v] = std::move(text);
  }

  [[nodiscard]] int vertex_count() const { return int(verts_.size()); }
  [[nodiscard]] int edge_count() const { return int(edges_.size()); }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return verts_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::map<Vertex, std::string>& labels() const { return labels_; }

  // Empty string when the vertex has no label.
  [[nodiscard]] std::string label(Vertex v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? std::string() : it->second;
  }

  [[nodiscard]] bool has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
  }

  // Edge id: index into edges(), or -1.
  [[nodiscard]] int edge_id(Vertex a, Vertex b) const {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return int(it - edges_.begin());
  }

  [[nodiscard]] int degree(Vertex v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v || e.v == v);
    return d;
  }

  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Edge& e : edges_) {
      if (e.u == v) out.push_back(e.v);
      else if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Position of v in the sorted vertex list, or -1.
  [[nodiscard]] int index_of(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return int(it - verts_.begin());
  }

  // Smallest nonnegative integer not currently used as a vertex id.
  [[nodiscard]] Vertex fresh_vertex() const {
    Vertex c = 0;
    for (Vertex v : verts_) {
      if (v > c) break;
      if (v == c) ++c;
    }
    return c;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::string> labels_;
};

// Adjacency bitsets indexed by vertex position; only for graphs with
// at most 64 vertices, which covers everything at desk scale.
inline std::vector<std::uint64_t> adjacency_bits(const Graph& g) {
  int n = g.vertex_count();
  if (n > 64) throw error("adjacency_bits: graph too large");
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    int i = g.index_of(e.u), j = g.index_of(e.v);
    adj[i] |= std::uint64_t(1) << j;
    adj[j] |= std::uint64_t(1) << i;
  }
  return adj;
}

struct Triangle {
  Vertex a = 0, b = 0, c = 0; // normalized: a < b < c
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  if (a == b || a == c || b == c) throw error("degenerate triangle");
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return Triangle{a, b, c};
}

inline bool is_triangle_of(const Graph& g, const Triangle& t) {
  return g.adjacent(t.a, t.b) && g.adjacent(t.a, t.c) && g.adjacent(t.b, t.c);
}

inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  const auto& vs = g.vertices();
  int n = int(vs.size());
  if (n <= 64) {
    auto adj = adjacency_bits(g);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!(adj[i] >> j & 1)) continue;
        std::uint64_t common = adj[i] & adj[j] & ~((std::uint64_t(2) << j) - 1);
        while (common) {
          int k = std::countr_zero(common);
          common &= common - 1;
          out.push_back(Triangle{vs[i], vs[j], vs[k]});
        }
      }
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(vs[i], vs[j])) continue;
      for (int k = j + 1; k < n; ++k)
        if (g.adjacent(vs[i], vs[k]) && g.adjacent(vs[j], vs[k]))
          out.push_back(Triangle{vs[i], vs[j], vs[k]});
    }
  return out;
}

struct GraphInvariants {
  std::optional<int> girth;        // nullopt means acyclic
  std::vector<int> degree_sequence; // non-increasing
  bool bipartite = false;
  std::vector<Triangle> triangle_list;
};

namespace detail {

// Shortest cycle via BFS from every vertex. Classic argument: for a
// start vertex on some shortest cycle the scan cannot overestimate.
inline std::optional<int> girth_of(const Graph& g) {
  const auto& vs = g.vertices();
  int n = int(vs.size());
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    int i = g.index_of(e.u), j = g.index_of(e.v);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

} // namespace detail

inline GraphInvariants invariants(const Graph& g) {
  GraphInvariants inv;
  inv.girth = detail::girth_of(g);
  for (Vertex v : g.vertices()) inv.degree_sequence.push_back(g.degree(v));
  std::sort(inv.degree_sequence.rbegin(), inv.degree_sequence.rend());
  inv.triangle_list = triangles(g);

  // Two-coloring over every component.
  const auto& vs = g.vertices();
  int n = int(vs.size());
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    int i = g.index_of(e.u), j = g.index_of(e.v);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> color(n, -1);
  inv.bipartite = true;
  for (int s = 0; s < n && inv.bipartite; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size() && inv.bipartite; ++qi) {
      int x = queue[qi];
      for (int y : adj[x]) {
        if (color[y] < 0) {
          color[y] = color[x] ^ 1;
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          inv.bipartite = false;
          break;
        }
      }
    }
  }
  return inv;
}

// Number of connected components (isolated vertices count).
inline int component_count(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (const Edge& e : g.edges())
    rep[find(g.index_of(e.u))] = find(g.index_of(e.v));
  int c = 0;
  for (int i = 0; i < n; ++i) c += (find(i) == i);
  return c;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() == 0 || component_count(g) == 1;
}

} // namespace xing
