#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "dpc/constructions.hpp"
#include "dpc/critical.hpp"
#include "dpc/io.hpp"
#include "dpc/potential.hpp"
#include "dpc/solver.hpp"
#include "dpc/sparsity.hpp"

namespace dpc {

namespace {

struct Options {
  std::string family;
  int i = 0;
  int j = 0;
  int m = 1;
  std::string graph;
  std::string cover;
  std::string out;
  std::string cover_out;
  std::string solver = "exhaustive";
  std::uint64_t max_covers = 0;
  std::size_t max_n = 0;
  unsigned threads = 1;
  std::size_t n = 2;
  std::size_t max_edges = 10;
  bool check = false;
  std::vector<int> is{1};
  std::vector<int> js{1};
  std::vector<int> ms{1};
};

Limits limits_of(const Options& o) {
  Limits l;
  l.threads = std::max(1U, o.threads);
  if (o.max_covers > 0) l.max_cover_edges = static_cast<std::size_t>(std::bit_width(o.max_covers) - 1);
  if (o.max_n > 0) {
    l.max_search_vertices = o.max_n;
    l.max_potential_vertices = o.max_n;
    l.max_sparsity_vertices = o.max_n;
    l.max_fdp_vertices = o.max_n;
  }
  l.max_fdp_edges = std::max(l.max_fdp_edges, o.max_edges);
  return l;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// An all-zero toughness read from a file carries no kind; match it to the regime.
Toughness fit_toughness(const Toughness& t, const DefectParams& p) {
  if (!t.all_zero()) return t;
  return regime(p) == Regime::IPlusOne ? Toughness::refined_zero(t.size()) : Toughness::zero(t.size());
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  body(f);
  if (!f) throw std::runtime_error("error writing '" + path + "'");
}

void print_map(std::ostream& out, const PhiMap& phi) {
  for (Vertex v = 0; v < phi.size(); ++v) out << "v " << v << ' ' << (phi[v] == Side::Poor ? 'P' : 'R') << '\n';
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw std::invalid_argument("unknown family '" + o.family + "'");
  const FamilyInstance f = build_family(*family, o.i, o.j, o.m);
  write_file(o.out, [&](std::ostream& s) { write_graph(s, f.graph); });
  if (!o.cover_out.empty()) write_file(o.cover_out, [&](std::ostream& s) { write_cover(s, f.bad_cover); });
  out << "family " << to_string(f.family) << " i " << f.i << " j " << f.j << " m " << f.m << '\n';
  out << "predicted n " << f.predicted_n << " e " << f.predicted_e << '\n';
  out << "actual n " << f.graph.num_vertices() << " e " << f.graph.num_edges() << '\n';
  return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out) {
  const GraphFile gf = read_graph_file(o.graph);
  const Cover c = read_cover_file(o.cover);
  check_dimensions(gf.graph, c);
  const DefectParams p(o.i, o.j);
  std::optional<PhiMap> phi;
  if (o.solver == "greedy") {
    if (p.i != p.j) throw std::invalid_argument("greedy solver needs i = j");
    if (!gf.toughness.all_zero()) throw std::invalid_argument("greedy solver needs zero toughness");
    phi = greedy_color(gf.graph, c, p.i);
    if (!phi) {
      out << "UNDECIDED\n";
      return kExitOk;
    }
  } else {
    phi = exhaustive_color(gf.graph, c, p, gf.toughness, limits_of(o));
  }
  if (phi) {
    print_map(out, *phi);
  } else {
    out << "UNCOLORABLE\n";
  }
  return kExitOk;
}

int cmd_colorable(const Options& o, std::ostream& out) {
  const GraphFile gf = read_graph_file(o.graph);
  const Colorability r = is_colorable(gf.graph, {o.i, o.j}, gf.toughness, limits_of(o));
  out << "colorable " << yes_no(r.colorable) << '\n';
  if (r.witness) {
    out << "witness " << r.witness_index << '\n';
    write_cover(out, *r.witness);
  }
  return kExitOk;
}

int cmd_critical(const Options& o, std::ostream& out) {
  const GraphFile gf = read_graph_file(o.graph);
  const DefectParams p(o.i, o.j);
  const Limits limits = limits_of(o);
  const bool critical = is_critical(gf.graph, p, fit_toughness(gf.toughness, p), limits);
  out << "critical " << yes_no(critical) << '\n';
  if (!critical || !gf.toughness.all_zero()) return kExitOk;
  const BoundReport r = check_bounds(gf.graph, p, limits);
  out << "n " << r.n << '\n' << "edges " << r.edges << '\n';
  if (r.bound) {
    out << "bound " << r.bound->numerator << '/' << r.bound->denominator << '\n';
    out << "holds " << yes_no(r.holds) << '\n' << "sharp " << yes_no(r.sharp) << '\n';
  }
  if (r.potential) {
    out << "potential " << r.potential->value << '\n' << "threshold " << *r.threshold << '\n';
    out << "potential-holds " << yes_no(r.potential_holds) << '\n';
  }
  return kExitOk;
}

int cmd_potential(const Options& o, std::ostream& out) {
  const GraphFile gf = read_graph_file(o.graph);
  const DefectParams p(o.i, o.j);
  const GraphPotential r = rho_graph(gf.graph, p, fit_toughness(gf.toughness, p), limits_of(o));
  out << "rho " << r.value << '\n' << "argmin";
  for (Vertex v : r.argmin) out << ' ' << v;
  out << '\n' << "threshold " << potential_threshold(p) << '\n';
  return kExitOk;
}

int cmd_fdp(const Options& o, std::ostream& out) {
  const auto r = fdp_search({o.i, o.j}, o.n, o.max_edges, limits_of(o));
  if (!r) {
    out << "fdp none\n";
    return kExitOk;
  }
  out << "fdp " << r->edges << '\n';
  write_graph(out, r->witness);
  return kExitOk;
}

int cmd_sparsity(const Options& o, std::ostream& out) {
  const GraphFile gf = read_graph_file(o.graph);
  const DefectParams p(o.i, o.j);
  const Limits limits = limits_of(o);
  const bool guarantee = sparsity_guarantee(gf.graph, p, limits);
  out << "guarantee " << yes_no(guarantee) << '\n';
  if (o.check && guarantee) out << "colorable " << yes_no(is_colorable(gf.graph, p, limits).colorable) << '\n';
  return kExitOk;
}

enum class Cell { Ok, Fail, Budget, NotApplicable };

const char* cell_name(Cell c) {
  switch (c) {
    case Cell::Ok:
      return "ok";
    case Cell::Fail:
      return "FAIL";
    case Cell::Budget:
      return "budget";
    case Cell::NotApplicable:
      return "-";
  }
  return "?";
}

template <typename F>
Cell guarded(F&& check) {
  try {
    return check() ? Cell::Ok : Cell::Fail;
  } catch (const BudgetExceeded&) {
    return Cell::Budget;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw std::invalid_argument("unknown family '" + o.family + "'");
  const Limits limits = limits_of(o);

  struct Point {
    int i, j, m;
  };
  std::vector<Point> points;
  for (int i : (*family == Family::ZeroJ ? std::vector<int>{0} : o.is)) {
    for (int j : (*family == Family::IPlusOne || *family == Family::Equal ? std::vector<int>{0} : o.js)) {
      for (int m : o.ms) points.push_back({i, j, m});
    }
  }

  out << std::left << std::setw(10) << "family" << std::right << std::setw(3) << "i" << std::setw(3) << "j"
      << std::setw(3) << "m" << std::setw(5) << "n" << std::setw(5) << "e" << "  " << std::left
      << std::setw(8) << "counts" << std::setw(11) << "bad-cover" << std::setw(10) << "critical"
      << std::setw(7) << "bound" << "potential" << '\n';

  int passed = 0, failed = 0, budget = 0, skipped = 0;
  for (const Point& pt : points) {
    std::optional<FamilyInstance> f;
    try {
      f = build_family(*family, pt.i, pt.j, pt.m);
    } catch (const std::invalid_argument& e) {
      ++skipped;
      out << std::left << std::setw(10) << to_string(*family) << std::right << std::setw(3) << pt.i
          << std::setw(3) << pt.j << std::setw(3) << pt.m << "  skipped: " << e.what() << '\n';
      continue;
    }
    const DefectParams p = f->params();
    const auto n = static_cast<std::int64_t>(f->graph.num_vertices());
    const auto e = static_cast<std::int64_t>(f->graph.num_edges());

    const Cell counts = (n == f->predicted_n && e == f->predicted_e &&
                         n == family_vertex_count(f->family, f->i, f->j, f->m) &&
                         e == family_edge_count(f->family, f->i, f->j, f->m))
                            ? Cell::Ok
                            : Cell::Fail;
    const Cell bad = guarded([&] { return !exhaustive_color(f->graph, f->bad_cover, p, limits).has_value(); });
    const Cell crit = guarded([&] { return is_critical(f->graph, p, limits); });
    const Cell bound = edge_bound(p, n).tight_at(e) ? Cell::Ok : Cell::Fail;
    Cell pot = Cell::NotApplicable;
    if (has_potential(regime(p))) {
      const Toughness t = fit_toughness(Toughness::zero(f->graph.num_vertices()), p);
      pot = guarded([&] { return rho_graph(f->graph, p, t, limits).value <= potential_threshold(p); });
    }

    const std::vector<Cell> cells{counts, bad, crit, bound, pot};
    if (std::ranges::count(cells, Cell::Fail) > 0) {
      ++failed;
    } else if (std::ranges::count(cells, Cell::Budget) > 0) {
      ++budget;
    } else {
      ++passed;
    }
    out << std::left << std::setw(10) << to_string(f->family) << std::right << std::setw(3) << f->i
        << std::setw(3) << f->j << std::setw(3) << f->m << std::setw(5) << n << std::setw(5) << e << "  "
        << std::left << std::setw(8) << cell_name(counts) << std::setw(11) << cell_name(bad) << std::setw(10)
        << cell_name(crit) << std::setw(7) << cell_name(bound) << cell_name(pot) << '\n';
  }
  out << "cells " << points.size() << " passed " << passed << " failed " << failed << " budget " << budget
      << " skipped " << skipped << '\n';
  return failed > 0 ? kExitVerifyFailed : kExitOk;
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--i", o.i, "poor defect bound")->check(CLI::NonNegativeNumber);
  sub->add_option("--j", o.j, "rich defect bound")->check(CLI::NonNegativeNumber);
}

void add_budgets(CLI::App* sub, Options& o) {
  sub->add_option("--max-covers", o.max_covers, "cover enumeration budget (rounded down to a power of two)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-n", o.max_n, "vertex budget for exhaustive stages")->check(CLI::PositiveNumber);
  sub->add_option("--threads", o.threads, "worker threads; output does not depend on this")
      ->check(CLI::PositiveNumber);
}

CLI::App* add_graph_command(CLI::App& app, Options& o, const std::string& name, const std::string& about,
                            const std::string& output) {
  CLI::App* sub = app.add_subcommand(name, about);
  add_params(sub, o);
  sub->add_option("--graph", o.graph, "graph file")->required()->check(CLI::ExistingFile);
  add_budgets(sub, o);
  sub->footer(output);
  return sub;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Defective DP-coloring toolkit for 2-fold covers of multigraphs"};
  app.require_subcommand(1);
  app.footer(
      "Graph files: 'graph <n>', then 'e <u> <v>', 't <v> <k>' or 't2 <v> <tp> <tr>'.\n"
      "Cover files: 'cover <m>', then 'p <edge> E|O'. '#' starts a comment.\n"
      "Exit codes: 0 answered, 1 verify failure, 2 usage, parse or budget error.");

  CLI::App* gen = app.add_subcommand("gen", "write a critical family instance and its bad cover");
  gen->add_option("--family", o.family, "zeroj, large, mid, iplusone or equal")->required();
  add_params(gen, o);
  gen->add_option("--m", o.m, "family size parameter");
  gen->add_option("-o,--out", o.out, "graph file to write")->required();
  gen->add_option("--cover-out", o.cover_out, "bad cover file to write");
  add_budgets(gen, o);
  gen->footer("Prints 'family ...', 'predicted n N e E' and 'actual n N e E'.");

  CLI::App* color = add_graph_command(app, o, "color", "find a coloring for one cover",
                                      "Prints one 'v <id> P|R' line per vertex, or UNCOLORABLE.\n"
                                      "The greedy solver prints UNDECIDED when it gets stuck.");
  color->add_option("--cover", o.cover, "cover file")->required()->check(CLI::ExistingFile);
  color->add_option("--solver", o.solver, "exhaustive or greedy")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));

  CLI::App* colorable = add_graph_command(
      app, o, "colorable", "decide colorability over every cover",
      "Prints 'colorable yes|no'; when no, 'witness <index>' and the first bad cover.");
  CLI::App* critical = add_graph_command(
      app, o, "critical", "decide criticality and report the edge bound",
      "Prints 'critical yes|no'. For critical graphs with zero toughness also prints\n"
      "n, edges, bound <num>/<den>, holds, sharp and, where defined, potential lines.");
  CLI::App* potential = add_graph_command(app, o, "potential", "minimum potential over vertex subsets",
                                          "Prints 'rho <value>', 'argmin <ids>' and 'threshold <value>'.");
  CLI::App* sparsity = add_graph_command(app, o, "sparsity", "check the every-subgraph density guarantee",
                                         "Prints 'guarantee yes|no'; with --check also 'colorable yes|no'.");
  sparsity->add_flag("--check", o.check, "also decide colorability when the guarantee holds");

  CLI::App* fdp = app.add_subcommand("fdp", "fewest edges of an n-vertex critical multigraph");
  add_params(fdp, o);
  fdp->add_option("--n", o.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  fdp->add_option("--max-edges", o.max_edges, "largest edge count to try");
  add_budgets(fdp, o);
  fdp->footer("Prints 'fdp <edges>' and the first critical graph found, or 'fdp none'.");

  CLI::App* verify = app.add_subcommand("verify", "check a family over a parameter grid");
  verify->add_option("--family", o.family, "zeroj, large, mid, iplusone or equal")->required();
  verify->add_option("--i", o.is, "comma-separated i values")->delimiter(',');
  verify->add_option("--j", o.js, "comma-separated j values")->delimiter(',');
  verify->add_option("--m", o.ms, "comma-separated m values")->delimiter(',');
  add_budgets(verify, o);
  verify->footer(
      "Prints one row per grid point: counts, bad-cover, critical, bound, potential.\n"
      "Cells read ok, FAIL, budget (limit exceeded) or - (not defined).\n"
      "Grid points outside the family's range are skipped.");

  std::vector<const char*> argv{"dpc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (color->parsed()) return cmd_color(o, out);
    if (colorable->parsed()) return cmd_colorable(o, out);
    if (critical->parsed()) return cmd_critical(o, out);
    if (potential->parsed()) return cmd_potential(o, out);
    if (sparsity->parsed()) return cmd_sparsity(o, out);
    if (fdp->parsed()) return cmd_fdp(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dpc
