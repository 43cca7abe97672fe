// Command-line front end. Subcommands: gen, moves, family, cr, draw,
// verify. Exit codes: 0 confirmed/consistent, 1 refuted, 2 usage error,
// 3 inconclusive (budget ran out before a verdict).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xing/closure.hpp"
#include "xing/drawing_io.hpp"
#include "xing/generators.hpp"
#include "xing/graph_io.hpp"
#include "xing/heuristic.hpp"
#include "xing/layout.hpp"
#include "xing/moves.hpp"
#include "xing/solver.hpp"
#include "xing/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::chrono::milliseconds parse_duration(const std::string& text) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw xing::error("bad duration '" + text + "'");
  }
  std::string unit = text.substr(used);
  if (v < 0) throw xing::error("duration must be nonnegative");
  if (unit == "ms") return std::chrono::milliseconds(long(v));
  if (unit == "s" || unit.empty()) return std::chrono::milliseconds(long(v * 1000));
  if (unit == "m") return std::chrono::milliseconds(long(v * 60000));
  if (unit == "h") return std::chrono::milliseconds(long(v * 3600000));
  throw xing::error("bad duration unit '" + unit + "' (use ms, s, m, or h)");
}

xing::Graph load_graph(const std::string& in, const std::string& name) {
  if (!name.empty()) return xing::named_graph(name);
  if (in.empty()) throw xing::error("need --in FILE or --name NAME");
  if (in == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return xing::parse_edge_list(ss.str());
  }
  std::ifstream f(in);
  if (!f) throw xing::error("cannot open " + in);
  std::ostringstream ss;
  ss << f.rdbuf();
  return xing::parse_edge_list(ss.str());
}

void write_text(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw xing::error("cannot open " + out + " for writing");
  f << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossing-number toolkit"};
  app.require_subcommand(1);

  std::string in, out, name, site, budget = "60s", format = "text";
  int n = 7, k = 1, seed = 1, workers = 1;
  long long nodes = 0;
  std::string op;

  auto* gen = app.add_subcommand("gen", "emit a named graph as an edge list");
  gen->add_option("--name", name, "graph name, e.g. K7, K3,3, C5, Heawood, Petersen, Q8")
      ->required();
  gen->add_option("--out", out, "output file (default stdout)");

  auto* moves = app.add_subcommand("moves", "apply a delta-wye or wye-delta move");
  moves->add_option("--in", in, "input edge list");
  moves->add_option("--name", name, "named input graph");
  moves->add_option("--op", op, "deltay or ydelta")->required();
  moves->add_option("--site", site, "a,b,c triangle for deltay; center vertex for ydelta")
      ->required();
  moves->add_option("--out", out, "output file (default stdout)");

  auto* family = app.add_subcommand("family", "closure of a graph under both moves");
  family->add_option("--name", name, "seed graph name (default K6)");
  family->add_option("--in", in, "seed edge list");
  family->add_option("--out", out, "output file (default stdout)");

  auto* cr = app.add_subcommand("cr", "crossing number bounds for a graph");
  cr->add_option("--in", in, "input edge list");
  cr->add_option("--name", name, "named input graph");
  cr->add_option("--budget", budget, "time budget, e.g. 60s, 5m (default 60s)");
  cr->add_option("--nodes", nodes, "search node budget (0 = none)");
  cr->add_option("--seed", seed, "random seed (default 1)");
  cr->add_option("--workers", workers, "worker threads (default 1)");
  int decide_k = -1;
  cr->add_option("--k", decide_k, "only decide cr <= k instead of computing exactly");
  std::string witness_out;
  cr->add_option("--witness", witness_out, "write the best drawing found (drawing v1 text)");

  auto* draw = app.add_subcommand("draw", "produce or export a drawing");
  draw->add_option("--in", in, "input edge list or drawing file");
  draw->add_option("--name", name, "named input graph");
  draw->add_option("--format", format, "text or svg (default text)");
  draw->add_option("--out", out, "output file (default stdout)");
  draw->add_option("--seed", seed, "random seed (default 1)");

  auto* verify = app.add_subcommand("verify", "check a published claim");
  std::string claim;
  verify->add_option("claim", claim, "thm1, thm2, thm3, or petersen")->required();
  verify->add_option("--n", n, "graph size parameter (default 7)");
  verify->add_option("--k", k, "move count parameter (default 1)");
  verify->add_option("--budget", budget, "time budget per solver call (default 60s)");
  verify->add_option("--seed", seed, "random seed (default 1)");
  verify->add_option("--workers", workers, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      write_text(out, xing::serialize_edge_list(xing::named_graph(name)));
      return kExitOk;
    }

    if (moves->parsed()) {
      xing::Graph g = load_graph(in, name);
      xing::Graph result;
      if (op == "deltay") {
        int a, b, c;
        char c1, c2;
        std::istringstream ss(site);
        if (!(ss >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',')
          throw xing::error("--site must be a,b,c for deltay");
        auto [h, step] = xing::delta_y(g, xing::make_triangle(a, b, c));
        std::cerr << "deltay at {" << a << "," << b << "," << c << "}: new center "
                  << step.center << "\n";
        result = std::move(h);
      } else if (op == "ydelta") {
        int v;
        std::istringstream ss(site);
        if (!(ss >> v)) throw xing::error("--site must be a vertex id for ydelta");
        auto [h, step] = xing::y_delta(g, v);
        std::cerr << "ydelta at " << v << ": " << step.simplified_edges
                  << " parallel edges merged\n";
        result = std::move(h);
      } else {
        throw xing::error("--op must be deltay or ydelta");
      }
      write_text(out, xing::serialize_edge_list(result));
      return kExitOk;
    }

    if (family->parsed()) {
      if (name.empty() && in.empty()) name = "K6";
      xing::Graph seed_graph = load_graph(in, name);
      xing::MoveClosure c = xing::move_closure(seed_graph);
      std::ostringstream report;
      report << "members " << c.members.size() << "\n";
      for (size_t i = 0; i < c.members.size(); ++i) {
        const xing::Graph& g = c.members[i].graph;
        report << "member " << i << ": " << g.vertex_count() << " vertices, "
               << g.edge_count() << " edges\n";
      }
      for (const xing::ClosureEdge& e : c.edges)
        report << "move " << e.from << " -> " << e.to << " ("
               << (e.step.kind == xing::MoveKind::delta_y ? "deltay" : "ydelta") << ")\n";
      write_text(out, report.str());
      return kExitOk;
    }

    xing::Budget b;
    b.wall = parse_duration(budget);
    b.node_limit = nodes > 0 ? nodes : -1;
    b.seed = seed;
    b.workers = workers;

    if (cr->parsed()) {
      xing::Graph g = load_graph(in, name);
      std::ostringstream report;
      report << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
             << " edges\n";
      int code = kExitOk;
      if (decide_k >= 0) {
        xing::DecideResult res = xing::decide_cr_le(g, decide_k, b);
        report << "cr <= " << decide_k << ": " << res.verdict << "\n";
        report << "nodes " << res.nodes << "\n";
        if (res.verdict == "yes") {
          report << "crossings found: " << res.witness->crossing_count() << "\n";
          if (!witness_out.empty())
            write_text(witness_out, xing::serialize_drawing(*res.witness));
        } else if (res.verdict == "no") {
          code = kExitRefuted;
        } else {
          code = kExitInconclusive;
        }
      } else {
        xing::CrBounds cb = xing::crossing_number(g, b);
        report << "lb " << cb.lb << " (" << cb.lb_certificate << ")\n";
        report << "ub " << cb.ub << "\n";
        report << "status " << cb.status << "\n";
        if (cb.status == "exact")
          report << "cr = " << cb.ub << "\n";
        else
          report << "cr in [" << cb.lb << ", " << cb.ub << "]\n";
        report << "nodes " << cb.nodes << "\n";
        if (!witness_out.empty())
          write_text(witness_out, xing::serialize_drawing(cb.witness));
        if (cb.status != "exact") code = kExitInconclusive;
      }
      std::cout << report.str();
      return code;
    }

    if (draw->parsed()) {
      xing::Drawing d;
      if (!in.empty()) {
        std::string text;
        if (in == "-") {
          std::ostringstream ss;
          ss << std::cin.rdbuf();
          text = ss.str();
        } else {
          std::ifstream f(in);
          if (!f) throw xing::error("cannot open " + in);
          std::ostringstream ss;
          ss << f.rdbuf();
          text = ss.str();
        }
        if (text.rfind("drawing v1", 0) == 0)
          d = xing::parse_drawing(text);
        else
          d = xing::upper_bound(xing::parse_edge_list(text), b);
      } else if (!name.empty()) {
        d = xing::upper_bound(xing::named_graph(name), b);
      } else {
        throw xing::error("draw needs --in FILE or --name NAME");
      }
      if (format == "text")
        write_text(out, xing::serialize_drawing(d));
      else if (format == "svg")
        write_text(out, xing::render_svg(d));
      else
        throw xing::error("--format must be text or svg");
      return kExitOk;
    }

    if (verify->parsed()) {
      xing::VerificationReport rep;
      if (claim == "thm1")
        rep = xing::verify_theorem1(n, b);
      else if (claim == "thm2")
        rep = xing::verify_theorem2(n, b);
      else if (claim == "thm3")
        rep = xing::verify_theorem3(n, k, b);
      else if (claim == "petersen")
        rep = xing::verify_petersen(b);
      else
        throw xing::error("claim must be thm1, thm2, thm3, or petersen");
      std::cout << xing::to_text(rep);
      if (rep.verdict == "refuted") return kExitRefuted;
      if (rep.verdict == "inconclusive") return kExitInconclusive;
      return kExitOk;
    }
  } catch (const xing::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
