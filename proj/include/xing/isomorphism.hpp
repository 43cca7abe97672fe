#pragma once

// Canonical labeling for desk-scale graphs (hard size cap, default 16
// vertices). Iterated degree/neighborhood partition refinement, then
// individualization search over the refined cells; the canonical form
// is the lexicographically smallest adjacency encoding over all leaf
// labelings. Cells whose vertices are pairwise interchangeable (induced
// subgraph complete or empty, all-or-none adjacency to every other
// cell) contribute a single representative, which keeps complete and
// complete-bipartite graphs from exploding into n! leaves.

#include <cstdint>
#include <string>
#include <vector>

#include "xing/graph.hpp"

namespace xing {

inline constexpr int kIsoSizeCap = 16;

namespace detail {

struct IsoSearch {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> adj;
  std::string best;
  bool have_best = false;
  long leaves = 0;

  static constexpr long kLeafBudget = 1 << 20;

  // Splits cells by (cell of vertex, multiset of neighbor cells) until
  // stable. Cell order after a split is by signature, which only uses
  // relabel-invariant data.
  void refine(std::vector<std::vector<int>>& cells) const {
    std::vector<int> cell_of(n);
    for (;;) {
      for (int c = 0; c < int(cells.size()); ++c)
        for (int v : cells[c]) cell_of[v] = c;
      std::vector<std::vector<int>> next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig;
          std::uint64_t nb = adj[v];
          while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            sig.push_back(cell_of[w]);
          }
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> part{keyed[0].second};
        for (size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(part);
            part.clear();
          }
          part.push_back(keyed[i].second);
        }
        next.push_back(part);
      }
      bool changed = next.size() != cells.size();
      cells = std::move(next);
      if (!changed) break;
    }
  }

  // True when any transposition inside the cell extends to a graph
  // automorphism fixing everything else.
  bool interchangeable(const std::vector<std::vector<int>>& cells,
                       const std::vector<int>& cell) const {
    std::uint64_t mask = 0;
    for (int v : cell) mask |= std::uint64_t(1) << v;
    int inner = std::popcount(adj[cell[0]] & mask);
    if (inner != 0 && inner != int(cell.size()) - 1) return false;
    for (int v : cell)
      if (std::popcount(adj[v] & mask) != inner) return false;
    for (const auto& other : cells) {
      if (&other == &cell) continue;
      std::uint64_t om = 0;
      for (int v : other) om |= std::uint64_t(1) << v;
      int want = std::popcount(adj[cell[0]] & om);
      if (want != 0 && want != int(other.size())) return false;
      for (int v : cell)
        if (std::popcount(adj[v] & om) != want) return false;
    }
    return true;
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> order(n);
    for (int p = 0; p < n; ++p) order[p] = cells[p][0];
    std::string key;
    key.reserve(2 + (n * (n - 1) / 2 + 7) / 8);
    key.push_back(char(n));
    key.push_back(char(m));
    int bit = 0;
    char acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        acc = char(acc << 1 | (adj[order[i]] >> order[j] & 1));
        if (++bit == 8) {
          key.push_back(acc);
          bit = 0;
          acc = 0;
        }
      }
    if (bit) key.push_back(char(acc << (8 - bit)));
    if (!have_best || key < best) {
      best = std::move(key);
      have_best = true;
    }
  }

  void search(std::vector<std::vector<int>> cells) {
    refine(cells);
    int target = -1;
    for (int c = 0; c < int(cells.size()); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      if (++leaves > kLeafBudget) throw error("canonical_form: search budget exceeded");
      leaf(cells);
      return;
    }
    std::vector<int> cand = cells[target];
    if (interchangeable(cells, cells[target])) cand.resize(1);
    for (int v : cand) {
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (int c = 0; c < int(cells.size()); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }
};

} // namespace detail

// Opaque canonical key: equal keys iff isomorphic. Throws for graphs
// larger than the size cap.
inline std::string canonical_form(const Graph& g, int size_cap = kIsoSizeCap) {
  int n = g.vertex_count();
  if (n > size_cap)
    throw error("canonical_form: " + std::to_string(n) + " vertices exceeds cap " +
                std::to_string(size_cap));
  if (n == 0) return std::string("\0\0", 2);
  detail::IsoSearch s;
  s.n = n;
  s.m = g.edge_count();
  s.adj = adjacency_bits(g);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  s.search({all});
  assert(s.have_best);
  return s.best;
}

inline bool is_isomorphic(const Graph& g, const Graph& h, int size_cap = kIsoSizeCap) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  GraphInvariants ig = invariants(g), ih = invariants(h);
  if (ig.degree_sequence != ih.degree_sequence) return false;
  return canonical_form(g, size_cap) == canonical_form(h, size_cap);
}

} // namespace xing
