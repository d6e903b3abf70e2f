#include "dpc/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dpc/parallel.hpp"
#include "dpc/potential.hpp"
#include "dpc/solver.hpp"

namespace dpc {

bool density_condition(const DefectParams& p, std::int64_t n, std::int64_t e) {
  const std::int64_t i = p.i;
  const std::int64_t j = p.j;
  switch (regime(p)) {
    case Regime::ZeroJ: return e <= n + j - 1;
    case Regime::Large: return (i + 1) * e <= (2 * i + 1) * n - (2 * i - j + 2);
    case Regime::Mid: return (j + 1) * e <= 2 * j * n + 1;
    case Regime::IPlusOne: return (i * i + 3 * i + 1) * e <= (2 * i * i + 4 * i + 1) * n;
    case Regime::Equal: return (i + 2) * e <= (2 * i + 2) * n - 1;
    case Regime::ZeroZero: break;
  }
  throw std::invalid_argument("no sparsity guarantee is available for (0,0)");
}

bool sparsity_guarantee(const Multigraph& g, const DefectParams& p, const Limits& limits) {
  const std::size_t n = g.num_vertices();
  require_within(n, std::min<std::size_t>(limits.max_sparsity_vertices, 40),
                 "sparsity scan over vertices:");
  if (regime(p) == Regime::ZeroZero) density_condition(p, 0, 0);  // throws

  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    edge_masks.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
  }

  const std::uint64_t full = std::uint64_t{1} << n;
  const auto violation = parallel_find_first(full, limits.threads, [&](std::uint64_t mask) {
    if (mask == 0) return false;
    std::int64_t inside = 0;
    for (std::uint64_t em : edge_masks) inside += (em & mask) == em ? 1 : 0;
    return !density_condition(p, std::popcount(mask), inside);
  });
  return !violation.has_value();
}

bool guarantee_implies_colorable(const Multigraph& g, const DefectParams& p, const Limits& limits) {
  if (!sparsity_guarantee(g, p, limits)) return true;
  return is_colorable(g, p, limits).colorable;
}

}  // namespace dpc
