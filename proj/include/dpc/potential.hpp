#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dpc/graph.hpp"
#include "dpc/limits.hpp"

namespace dpc {

// Classification of (i,j) that selects the potential constants and the
// matching lower bound on critical edge counts.
enum class Regime {
  ZeroJ,     // i = 0, j >= 1
  Large,     // i >= 1, j >= 2i+1
  Mid,       // i >= 1, i+2 <= j <= 2i
  IPlusOne,  // i >= 1, j = i+1
  Equal,     // i = j >= 1
  ZeroZero,  // i = j = 0
};

std::string_view to_string(Regime r);
Regime regime(const DefectParams& p);
bool has_scalar_potential(Regime r);
bool has_potential(Regime r);

using Potential = std::int64_t;

// Constants a_{i,j}, b_{i,j} for the scalar-potential regimes.
struct PotentialConstants {
  Potential a;
  Potential b;
};
PotentialConstants constants(const DefectParams& p);

// Potential of a k-tough vertex: a + k(a - 2b).
Potential weight_w(const DefectParams& p, int k);

Potential rho_vertex(const DefectParams& p, const Toughness& t, Vertex v);
Potential rho_set(const Multigraph& g, const DefectParams& p, const Toughness& t,
                  std::span<const Vertex> s);

struct GraphPotential {
  Potential value = 0;
  std::vector<Vertex> argmin;  // lexicographically first minimizing set
};

// Minimum of rho_set over all nonempty vertex subsets.
GraphPotential rho_graph(const Multigraph& g, const DefectParams& p, const Toughness& t,
                         const Limits& limits = {});

// Potential that every critical pair must reach: w_{j+1} for scalar regimes,
// -1 for the i+1 regime.
Potential potential_threshold(const DefectParams& p);

// Lower bound on the edge count of an n-vertex critical multigraph, kept as
// the unreduced fraction numerator / denominator of its closed form.
struct EdgeBound {
  std::int64_t numerator;
  std::int64_t denominator;

  std::int64_t ceil() const;
  bool satisfied_by(std::int64_t edges) const { return edges * denominator >= numerator; }
  bool tight_at(std::int64_t edges) const { return edges * denominator == numerator; }
};

EdgeBound edge_bound(const DefectParams& p, std::int64_t n);

}  // namespace dpc
