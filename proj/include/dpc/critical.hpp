#pragma once

#include <cstdint>
#include <optional>

#include "dpc/graph.hpp"
#include "dpc/limits.hpp"
#include "dpc/potential.hpp"

namespace dpc {

// Not (i,j,t)-colorable while every proper subgraph is. Proper subgraphs are
// covered by the single-edge deletions because colorability is monotone under
// taking subgraphs. A graph with an isolated vertex is critical only when it
// is that one vertex and no side of it fits its cap.
bool is_critical(const Multigraph& g, const DefectParams& p, const Toughness& t,
                 const Limits& limits = {});
bool is_critical(const Multigraph& g, const DefectParams& p, const Limits& limits = {});

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t edges = 0;
  std::optional<EdgeBound> bound;  // absent for (0,0)
  bool holds = false;
  bool sharp = false;
  std::optional<GraphPotential> potential;  // regimes with a potential only
  std::optional<Potential> threshold;
  bool potential_holds = true;
};

// Compares a zero-toughness critical graph against the lower bound on edges
// and, where defined, the potential threshold.
BoundReport check_bounds(const Multigraph& g, const DefectParams& p, const Limits& limits = {});

struct FdpResult {
  std::int64_t edges;
  Multigraph witness;
};

// Smallest edge count of an n-vertex (i,j)-critical multigraph, searching
// every edge multiset from the theoretical floor up to max_edges. Isomorphic
// duplicates are visited; the witness is the first in enumeration order.
std::optional<FdpResult> fdp_search(const DefectParams& p, std::size_t n, std::size_t max_edges,
                                    const Limits& limits = {});

}  // namespace dpc
