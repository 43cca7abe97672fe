#pragma once

// Exact crossing-number decision and bound aggregation.
//
// decide_cr_le(g, k) asks whether some drawing uses at most k
// crossings. Since some minimal drawing is always good, the search
// space is the set of configurations (S, orderings): S a lex-increasing
// set of distinct pairs of independent edges, plus for every edge an
// order of its crossings. A configuration is a hit when its
// planarization (crossings as degree-4 vertices) is a planar abstract
// graph; transversality is not required at this stage, because
// non-alternating crossing nodes of the embedding are touchings that
// can be removed, so "yes" stays sound and the witness only gets
// cheaper. "no" is sound by exhaustion of the canonical enumeration.
//
// Pruning, both sound and best-effort: whenever a node's planarization
// is non-planar, any planarizing extension must eventually place a
// crossing whose two edges both carry segments of the current
// Kuratowski obstruction (new crossings only subdivide obstruction
// segments otherwise, and a subdivided obstruction still obstructs).
// If no remaining admissible pair does so, the subtree dies. The
// children themselves are never restricted to obstruction-hitting
// pairs: the hitting pair may be lexicographically later, so
// restricting would lose completeness.
//
// Parallelism: the top-level branches (one per first pair) go to a
// worker pool. Under a node budget every branch gets a fixed quota of
// node_limit / branch-count regardless of worker count, no branch
// cancels another, and the aggregation prefers the lexicographically
// first "yes"; verdict, bounds and witness are therefore identical for
// any worker count. Under a pure wall-clock budget a found "yes" stops
// the other workers early.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "xing/bounds.hpp"
#include "xing/budget.hpp"
#include "xing/drawing.hpp"
#include "xing/graph.hpp"
#include "xing/heuristic.hpp"

namespace xing {

// Beyond this many crossings on one edge the ordering enumeration is
// cut off and a "no" is downgraded from exhaustive to bounded.
inline constexpr int kMaxCrossingsPerEdge = 6;

struct DecideResult {
  std::string verdict; // "yes" | "no" | "timeout"
  std::optional<Drawing> witness;
  long long nodes = 0;
  bool exhaustive = true;    // "no" only: false when the per-edge cap cut subtrees
  bool node_limited = false; // "timeout" only: stopped by node quota, not wall clock
};

namespace detail {

// One search node: the planarization of (S, seq) as an abstract graph.
// Crossing i of S becomes vertex n+i; edge chains follow seq. Reports
// planarity plus either the rotation system (planar) or the set of
// original edges owning segments of a Kuratowski obstruction. The raw
// obstruction output may carry extra edges; the owner set is a
// superset of a true obstruction's owners either way, which is the
// safe direction for the subtree prune.
struct NodeProbe {
  bool planar = false;
  std::vector<char> in_obstruction;       // per original edge
  std::vector<std::vector<int>> node_rot; // per planarization node: segment ids
  std::vector<std::vector<int>> chains;   // per original edge: segment ids, lo to hi
  std::vector<int> seg_owner;
};

inline NodeProbe probe_planarization(const Graph& g,
                                     const std::vector<std::pair<int, int>>& S,
                                     const std::vector<std::vector<int>>& seq) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  int n = g.vertex_count();
  int nodes = n + int(S.size());
  NodeProbe out;
  out.chains.resize(g.edge_count());
  if (nodes == 0) {
    out.planar = true;
    return out;
  }
  BoostGraph bg(nodes);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    int prev = g.index_of(ed.u);
    auto link = [&](int to) {
      int s = int(out.seg_owner.size());
      out.chains[e].push_back(s);
      out.seg_owner.push_back(e);
      boost::add_edge(prev, to, boost::property<boost::edge_index_t, int>(s), bg);
      prev = to;
    };
    for (int ci : seq[e]) link(n + ci);
    link(g.index_of(ed.v));
  }

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(nodes);
  std::vector<EdgeDesc> kuratowski;
  out.planar = boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &embedding[0],
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));

  auto index = boost::get(boost::edge_index, bg);
  if (out.planar) {
    out.node_rot.resize(nodes);
    for (int i = 0; i < nodes; ++i)
      for (EdgeDesc e : embedding[i])
        out.node_rot[i].push_back(boost::get(index, e));
  } else {
    out.in_obstruction.assign(g.edge_count(), 0);
    for (EdgeDesc e : kuratowski)
      out.in_obstruction[out.seg_owner[boost::get(index, e)]] = 1;
  }
  return out;
}

// Turn a planar configuration into a valid good drawing. Crossing
// nodes whose four darts do not alternate between the two edges are
// touchings, not crossings; dropping one splits the node along the
// embedding's own rotation, so planarity survives and the loop
// re-embeds until every remaining crossing is transversal.
inline Drawing witness_from(const Graph& g, std::vector<std::pair<int, int>> S,
                            std::vector<std::vector<int>> seq) {
  int n = g.vertex_count();
  for (;;) {
    NodeProbe p = probe_planarization(g, S, seq);
    if (!p.planar) throw error("solver: planar configuration failed to re-embed");

    std::vector<char> touching(S.size(), 0);
    bool any = false;
    for (size_t ci = 0; ci < S.size(); ++ci) {
      const auto& rot = p.node_rot[n + ci];
      if (p.seg_owner[rot[0]] == p.seg_owner[rot[1]] ||
          p.seg_owner[rot[1]] == p.seg_owner[rot[2]]) {
        touching[ci] = 1;
        any = true;
      }
    }
    if (any) {
      std::vector<int> remap(S.size(), -1);
      std::vector<std::pair<int, int>> keptS;
      for (size_t ci = 0; ci < S.size(); ++ci) {
        if (touching[ci]) continue;
        remap[ci] = int(keptS.size());
        keptS.push_back(S[ci]);
      }
      for (auto& s : seq) {
        std::vector<int> kept;
        for (int ci : s)
          if (remap[ci] >= 0) kept.push_back(remap[ci]);
        s = std::move(kept);
      }
      S = std::move(keptS);
      continue;
    }

    std::vector<CrossingRef> crossings;
    for (auto [a, b] : S) crossings.push_back({a, b});
    std::map<Vertex, std::vector<int>> vrot;
    for (int i = 0; i < n; ++i) {
      auto& rot = vrot[g.vertices()[i]];
      for (int s : p.node_rot[i]) rot.push_back(p.seg_owner[s]);
    }
    std::vector<std::array<CrossDart, 4>> crot;
    for (size_t ci = 0; ci < S.size(); ++ci) {
      std::array<CrossDart, 4> r{};
      for (int d = 0; d < 4; ++d) {
        int s = p.node_rot[n + ci][d];
        int e = p.seg_owner[s];
        int pos = int(std::find(seq[e].begin(), seq[e].end(), int(ci)) -
                      seq[e].begin());
        r[d] = {e, p.chains[e][pos + 1] == s};
      }
      crot.push_back(r);
    }
    return Drawing::build(g, std::move(crossings), std::move(seq),
                          std::move(vrot), std::move(crot));
  }
}

// Shared read-only context plus one branch's depth-first search over
// lex-increasing pair sets with incremental crossing orderings.
struct SearchContext {
  const Graph* g = nullptr;
  int k = 0;
  std::vector<std::pair<int, int>> pairs; // all independent pairs, lex order
  std::chrono::steady_clock::time_point deadline;
  long long quota = -1; // per branch, < 0 unlimited
  const std::atomic<bool>* stop = nullptr;
};

struct BranchRun {
  const SearchContext* ctx = nullptr;
  std::vector<std::pair<int, int>> S;
  std::vector<std::vector<int>> seq;
  long long nodes = 0;
  bool capped = false, hit_quota = false, hit_wall = false;
  std::optional<Drawing> witness;

  [[nodiscard]] bool stopped() const { return hit_quota || hit_wall; }

  // True exactly when a planar configuration was found (witness set).
  bool search(int last_idx) {
    ++nodes;
    if (ctx->quota >= 0 && nodes > ctx->quota) {
      hit_quota = true;
      return false;
    }
    if (std::chrono::steady_clock::now() >= ctx->deadline) {
      hit_wall = true;
      return false;
    }
    if (ctx->stop && ctx->stop->load(std::memory_order_relaxed)) {
      hit_wall = true;
      return false;
    }

    NodeProbe p = probe_planarization(*ctx->g, S, seq);
    if (p.planar) {
      witness = witness_from(*ctx->g, S, seq);
      return true;
    }
    if (int(S.size()) == ctx->k) return false;

    bool reachable = false;
    for (size_t i = last_idx + 1; i < ctx->pairs.size() && !reachable; ++i)
      reachable = p.in_obstruction[ctx->pairs[i].first] &&
                  p.in_obstruction[ctx->pairs[i].second];
    if (!reachable) return false;

    for (int i = last_idx + 1; i < int(ctx->pairs.size()); ++i) {
      auto [a, b] = ctx->pairs[i];
      if (int(seq[a].size()) >= kMaxCrossingsPerEdge ||
          int(seq[b].size()) >= kMaxCrossingsPerEdge) {
        capped = true;
        continue;
      }
      int ci = int(S.size());
      int la = int(seq[a].size()), lb = int(seq[b].size());
      S.push_back(ctx->pairs[i]);
      for (int ia = 0; ia <= la; ++ia)
        for (int ib = 0; ib <= lb; ++ib) {
          seq[a].insert(seq[a].begin() + ia, ci);
          seq[b].insert(seq[b].begin() + ib, ci);
          bool found = search(i);
          seq[a].erase(std::find(seq[a].begin(), seq[a].end(), ci));
          seq[b].erase(std::find(seq[b].begin(), seq[b].end(), ci));
          if (found) return true;
          if (stopped()) {
            S.pop_back();
            return false;
          }
        }
      S.pop_back();
    }
    return false;
  }
};

inline std::vector<std::pair<int, int>> independent_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.edge_count(); ++a)
    for (int b = a + 1; b < g.edge_count(); ++b) {
      const Edge& ea = g.edges()[a];
      const Edge& eb = g.edges()[b];
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) continue;
      out.push_back({a, b});
    }
  return out;
}

} // namespace detail

inline DecideResult decide_cr_le(const Graph& g, int k, const Budget& budget = {}) {
  budget.check();
  if (k < 0) throw error("decide_cr_le: need k >= 0");
  auto t0 = std::chrono::steady_clock::now();

  DecideResult out;
  if (lower_bounds(g).value > k) {
    out.verdict = "no";
    return out;
  }

  std::vector<std::vector<int>> seq0(g.edge_count());
  detail::NodeProbe root = detail::probe_planarization(g, {}, seq0);
  out.nodes = 1;
  if (root.planar) {
    out.verdict = "yes";
    out.witness = detail::witness_from(g, {}, seq0);
    return out;
  }
  if (k == 0) {
    out.verdict = "no";
    return out;
  }

  detail::SearchContext ctx;
  ctx.g = &g;
  ctx.k = k;
  ctx.pairs = detail::independent_pairs(g);
  ctx.deadline = t0 + budget.wall;

  bool reachable = false;
  for (const auto& [a, b] : ctx.pairs)
    reachable |= root.in_obstruction[a] && root.in_obstruction[b];
  if (ctx.pairs.empty() || !reachable) {
    out.verdict = "no";
    return out;
  }

  bool node_mode = budget.node_limit > 0;
  if (node_mode)
    ctx.quota = std::max<long long>(
        1, (budget.node_limit - 1) / int(ctx.pairs.size()));
  std::atomic<bool> stop{false};
  if (!node_mode) ctx.stop = &stop;

  std::vector<detail::BranchRun> runs(ctx.pairs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t b = next.fetch_add(1);
      if (b >= ctx.pairs.size()) return;
      detail::BranchRun& run = runs[b];
      run.ctx = &ctx;
      if (ctx.stop && stop.load(std::memory_order_relaxed)) {
        run.hit_wall = true;
        continue;
      }
      auto [ea, eb] = ctx.pairs[b];
      run.S.push_back(ctx.pairs[b]);
      run.seq.assign(g.edge_count(), {});
      run.seq[ea].push_back(0);
      run.seq[eb].push_back(0);
      if (run.search(int(b)) && ctx.stop) stop.store(true);
    }
  };
  int threads = std::min<int>(budget.workers, int(ctx.pairs.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool any_quota = false, any_wall = false, any_capped = false;
  int first_yes = -1;
  for (int b = 0; b < int(runs.size()); ++b) {
    out.nodes += runs[b].nodes;
    any_quota |= runs[b].hit_quota;
    any_wall |= runs[b].hit_wall;
    any_capped |= runs[b].capped;
    if (runs[b].witness && first_yes < 0) first_yes = b;
  }
  if (first_yes >= 0) {
    out.verdict = "yes";
    out.witness = std::move(runs[first_yes].witness);
  } else if (any_quota || any_wall) {
    out.verdict = "timeout";
    out.node_limited = any_quota && !any_wall;
  } else {
    out.verdict = "no";
    out.exhaustive = !any_capped;
  }
  return out;
}

struct CrBounds {
  int lb = 0;
  int ub = 0;
  std::string status;          // "exact" | "bounded" | "timeout"
  std::string lb_certificate;  // euler|girth|counting|kuratowski-packing|exhausted-k
  Drawing witness;             // valid good drawing with crossing_count = ub
  long long nodes = 0;
  std::chrono::milliseconds elapsed{0};
};

// Iterative deepening between the bound stack and the heuristic: each
// exhausted level k raises lb to k+1; the first "yes" settles ub with
// its witness. status records how far that got: "exact" when lb = ub,
// "timeout" when the wall ran out first, "bounded" when a node quota
// or the per-edge ordering cap stopped the search instead.
inline CrBounds crossing_number(const Graph& g, const Budget& budget = {}) {
  budget.check();
  auto t0 = std::chrono::steady_clock::now();
  auto deadline = t0 + budget.wall;
  auto finish = [&](CrBounds& out) -> CrBounds& {
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return out;
  };

  CrBounds out;
  LowerBound lbs = lower_bounds(g);
  out.lb = lbs.value;
  out.lb_certificate = lbs.certificate;
  out.witness = upper_bound(g, budget);
  out.ub = out.witness.crossing_count();

  while (out.lb < out.ub) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      out.status = "timeout";
      return finish(out);
    }
    Budget step = budget;
    step.wall = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
    DecideResult r = decide_cr_le(g, out.lb, step);
    out.nodes += r.nodes;
    if (r.verdict == "yes") {
      out.witness = std::move(*r.witness);
      out.ub = out.witness.crossing_count();
      break;
    }
    if (r.verdict == "no") {
      if (!r.exhaustive) {
        out.status = "bounded";
        return finish(out);
      }
      ++out.lb;
      out.lb_certificate = "exhausted-k";
    } else {
      out.status = r.node_limited ? "bounded" : "timeout";
      return finish(out);
    }
  }
  out.status = "exact";
  return finish(out);
}

namespace detail {

// Deliberately separate planarization builder for the brute-force
// oracle; shares no search or pruning code with decide_cr_le.
inline bool brute_planarizes(const Graph& g, int k,
                             const std::vector<std::vector<int>>& per_edge) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  int n = g.vertex_count();
  BoostGraph bg(n + k);
  int nextIndex = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    int prev = g.index_of(ed.u);
    for (int ci : per_edge[e]) {
      boost::add_edge(prev, n + ci,
                      boost::property<boost::edge_index_t, int>(nextIndex++), bg);
      prev = n + ci;
    }
    boost::add_edge(prev, g.index_of(ed.v),
                    boost::property<boost::edge_index_t, int>(nextIndex++), bg);
  }
  return boyer_myrvold_planarity_test(bg);
}

} // namespace detail

// Unpruned oracle: try every set of k independent pairs for k = 0, 1,
// ..., cap with every per-edge crossing order, and return the first k
// whose planarization embeds. Exponential on purpose; keep it to desk
// scale inputs.
inline int brute_force_cr(const Graph& g, int cap = 6) {
  if (cap < 0) throw error("brute_force_cr: need cap >= 0");
  auto pairs = detail::independent_pairs(g);
  std::vector<std::vector<int>> per_edge(g.edge_count());
  if (detail::brute_planarizes(g, 0, per_edge)) return 0;

  for (int k = 1; k <= cap; ++k) {
    if (k > int(pairs.size())) break;
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
      for (auto& s : per_edge) s.clear();
      std::vector<int> loaded;
      for (int ci = 0; ci < k; ++ci) {
        auto [a, b] = pairs[combo[ci]];
        per_edge[a].push_back(ci);
        per_edge[b].push_back(ci);
      }
      for (int e = 0; e < g.edge_count(); ++e)
        if (per_edge[e].size() > 1) loaded.push_back(e);

      for (;;) {
        if (detail::brute_planarizes(g, k, per_edge)) return k;
        size_t i = 0;
        while (i < loaded.size() &&
               !std::next_permutation(per_edge[loaded[i]].begin(),
                                      per_edge[loaded[i]].end()))
          ++i;
        if (i == loaded.size()) break;
      }

      // Next k-combination of pair indices.
      int pos = k - 1;
      while (pos >= 0 && combo[pos] == int(pairs.size()) - k + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int j = pos + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  throw error("brute_force_cr: no planarizing set within cap " +
              std::to_string(cap));
}

} // namespace xing
