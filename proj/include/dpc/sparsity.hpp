#pragma once

#include <cstdint>

#include "dpc/graph.hpp"
#include "dpc/limits.hpp"

namespace dpc {

// Whether |E(H)| and |V(H)| satisfy the edge-density condition that
// guarantees (i,j)-colorability, for one subgraph H.
bool density_condition(const DefectParams& p, std::int64_t vertices, std::int64_t edges);

// True iff every subgraph on a nonempty vertex set meets density_condition.
// Induced subgraphs suffice since they have the most edges on their vertices.
bool sparsity_guarantee(const Multigraph& g, const DefectParams& p, const Limits& limits = {});

// Test oracle: false only if g meets the sparsity guarantee yet some cover
// has no coloring.
bool guarantee_implies_colorable(const Multigraph& g, const DefectParams& p,
                                 const Limits& limits = {});

}  // namespace dpc
