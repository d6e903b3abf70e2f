#include "dpc/critical.hpp"

#include <vector>

#include "dpc/parallel.hpp"
#include "dpc/solver.hpp"

namespace dpc {

bool is_critical(const Multigraph& g, const DefectParams& p, const Toughness& t,
                 const Limits& limits) {
  t.validate(p, g.num_vertices());
  if (g.num_vertices() == 0) return false;
  if (g.min_degree() == 0) {
    if (g.num_vertices() != 1) return false;
    return side_cap(p, t, 0, Side::Poor) < 0 && side_cap(p, t, 0, Side::Rich) < 0;
  }
  if (is_colorable(g, p, t, limits).colorable) return false;

  Limits inner = limits;
  inner.threads = 1;
  const auto bad_deletion = parallel_find_first(g.num_edges(), limits.threads, [&](std::uint64_t e) {
    return !is_colorable(delete_edge(g, e), p, t, inner).colorable;
  });
  return !bad_deletion.has_value();
}

bool is_critical(const Multigraph& g, const DefectParams& p, const Limits& limits) {
  return is_critical(g, p, Toughness::zero(g.num_vertices()), limits);
}

BoundReport check_bounds(const Multigraph& g, const DefectParams& p, const Limits& limits) {
  BoundReport report;
  report.n = static_cast<std::int64_t>(g.num_vertices());
  report.edges = static_cast<std::int64_t>(g.num_edges());
  const Regime r = regime(p);
  if (r != Regime::ZeroZero && report.n >= 1) {
    report.bound = edge_bound(p, report.n);
    report.holds = report.bound->satisfied_by(report.edges);
    report.sharp = report.bound->tight_at(report.edges);
  }
  if (has_potential(r) && report.n >= 1) {
    const Toughness t = r == Regime::IPlusOne ? Toughness::refined_zero(g.num_vertices())
                                              : Toughness::zero(g.num_vertices());
    report.potential = rho_graph(g, p, t, limits);
    report.threshold = potential_threshold(p);
    report.potential_holds = report.potential->value <= *report.threshold;
  }
  return report;
}

namespace {

// Next multiset (non-decreasing index sequence) over `pairs` symbols.
bool next_multiset(std::vector<std::size_t>& pick, std::size_t pairs) {
  std::size_t k = pick.size();
  while (k > 0) {
    --k;
    if (pick[k] + 1 < pairs) {
      const std::size_t value = pick[k] + 1;
      for (std::size_t r = k; r < pick.size(); ++r) pick[r] = value;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<FdpResult> fdp_search(const DefectParams& p, std::size_t n, std::size_t max_edges,
                                    const Limits& limits) {
  require_within(n, limits.max_fdp_vertices, "f_DP search over vertices:");
  require_within(max_edges, limits.max_fdp_edges, "f_DP search over edges:");
  if (n < 2) return std::nullopt;

  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }

  std::size_t floor = 1;
  if (regime(p) != Regime::ZeroZero) {
    floor = static_cast<std::size_t>(edge_bound(p, static_cast<std::int64_t>(n)).ceil());
  }

  Limits inner = limits;
  inner.threads = 1;
  for (std::size_t e = floor; e <= max_edges; ++e) {
    std::vector<Multigraph> candidates;
    std::vector<std::size_t> pick(e, 0);
    do {
      std::vector<Edge> edges;
      edges.reserve(e);
      for (std::size_t k : pick) edges.push_back(pairs[k]);
      Multigraph g(n, std::move(edges));
      if (g.min_degree() > 0) candidates.push_back(std::move(g));
    } while (next_multiset(pick, pairs.size()));

    const auto hit = parallel_find_first(candidates.size(), limits.threads, [&](std::uint64_t k) {
      return is_critical(candidates[k], p, inner);
    });
    if (hit) return FdpResult{static_cast<std::int64_t>(e), candidates[*hit]};
  }
  return std::nullopt;
}

}  // namespace dpc
