#include "dpc/potential.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "dpc/parallel.hpp"

namespace dpc {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::ZeroJ: return "zeroj";
    case Regime::Large: return "large";
    case Regime::Mid: return "mid";
    case Regime::IPlusOne: return "iplusone";
    case Regime::Equal: return "equal";
    case Regime::ZeroZero: return "zerozero";
  }
  return "unknown";
}

Regime regime(const DefectParams& p) {
  if (p.i == 0) return p.j == 0 ? Regime::ZeroZero : Regime::ZeroJ;
  if (p.j == p.i) return Regime::Equal;
  if (p.j == p.i + 1) return Regime::IPlusOne;
  if (p.j >= 2 * p.i + 1) return Regime::Large;
  return Regime::Mid;
}

bool has_scalar_potential(Regime r) {
  return r == Regime::ZeroJ || r == Regime::Large || r == Regime::Mid;
}

bool has_potential(Regime r) { return has_scalar_potential(r) || r == Regime::IPlusOne; }

PotentialConstants constants(const DefectParams& p) {
  switch (regime(p)) {
    case Regime::ZeroJ: return {1, 1};
    case Regime::Large: return {2 * p.i + 1, p.i + 1};
    case Regime::Mid: return {2 * p.j, p.j + 1};
    default:
      throw std::invalid_argument("no scalar potential for regime " +
                                  std::string(to_string(regime(p))));
  }
}

Potential weight_w(const DefectParams& p, int k) {
  const auto [a, b] = constants(p);
  if (k < 0 || k > p.j + 1) throw std::invalid_argument("toughness level must lie in [0, j+1]");
  return a + k * (a - 2 * b);
}

namespace {

Potential refined_base(const DefectParams& p) {
  const Potential i = p.i;
  return 2 * i * i + 4 * i + 1;
}

Potential edge_weight(const DefectParams& p) {
  if (regime(p) == Regime::IPlusOne) {
    const Potential i = p.i;
    return i * i + 3 * i + 1;
  }
  return constants(p).b;
}

void check_toughness_kind(const DefectParams& p, const Toughness& t) {
  const Regime r = regime(p);
  if (has_scalar_potential(r) && !t.is_scalar()) {
    throw std::invalid_argument("regime " + std::string(to_string(r)) + " needs scalar toughness");
  }
  if (r == Regime::IPlusOne && t.is_scalar()) {
    throw std::invalid_argument("regime iplusone needs refined toughness");
  }
  if (!has_potential(r)) {
    throw std::invalid_argument("no potential for regime " + std::string(to_string(r)));
  }
}

Potential vertex_value(const DefectParams& p, const Toughness& t, Vertex v) {
  if (regime(p) == Regime::IPlusOne) {
    const Potential i = p.i;
    const Potential tp = t.poor(v);
    const Potential tr = t.rich(v);
    if (tp >= tr) return refined_base(p) - (i + 1) * tp - i * tr;
    return refined_base(p) - i * tp - (i + 1) * tr;
  }
  return weight_w(p, t.value(v));
}

// Lexicographic order of the sorted element lists of two subsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace

Potential rho_vertex(const DefectParams& p, const Toughness& t, Vertex v) {
  check_toughness_kind(p, t);
  if (v >= t.size()) throw std::out_of_range("vertex out of range for toughness");
  return vertex_value(p, t, v);
}

Potential rho_set(const Multigraph& g, const DefectParams& p, const Toughness& t,
                  std::span<const Vertex> s) {
  check_toughness_kind(p, t);
  t.validate(p, g.num_vertices());
  std::vector<bool> in(g.num_vertices(), false);
  Potential total = 0;
  for (Vertex v : s) {
    if (v >= g.num_vertices()) throw std::out_of_range("subset vertex out of range");
    if (in[v]) continue;
    in[v] = true;
    total += vertex_value(p, t, v);
  }
  Potential inside = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) ++inside;
  }
  return total - edge_weight(p) * inside;
}

GraphPotential rho_graph(const Multigraph& g, const DefectParams& p, const Toughness& t,
                         const Limits& limits) {
  check_toughness_kind(p, t);
  const std::size_t n = g.num_vertices();
  require_within(n, std::min<std::size_t>(limits.max_potential_vertices, 40),
                 "potential minimization over vertices:");
  t.validate(p, n);
  if (n == 0) throw std::invalid_argument("graph potential needs at least one vertex");

  std::vector<Potential> weight(n);
  for (Vertex v = 0; v < n; ++v) weight[v] = vertex_value(p, t, v);
  const Potential b = edge_weight(p);

  // layers[v][k] holds the higher-numbered neighbors joined to v by more
  // than k parallel edges, so inner edges are sums of popcounts.
  std::vector<std::vector<std::uint64_t>> layers(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = v + 1; u < n; ++u) {
      const std::size_t mult = g.multiplicity(v, u);
      if (layers[v].size() < mult) layers[v].resize(mult, 0);
      for (std::size_t k = 0; k < mult; ++k) layers[v][k] |= std::uint64_t{1} << u;
    }
  }

  auto value_of = [&](std::uint64_t mask) {
    Potential total = 0;
    Potential inside = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      total += weight[v];
      for (std::uint64_t layer : layers[v]) inside += std::popcount(layer & mask);
    }
    return total - b * inside;
  };

  const std::uint64_t full = std::uint64_t{1} << n;
  const unsigned chunk_bits = n > 12 ? static_cast<unsigned>(n) - 12 : 0;
  const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
  const std::uint64_t per_chunk = full >> chunk_bits;

  struct Best {
    Potential value = 0;
    std::uint64_t mask = 0;
  };
  std::vector<Best> best(chunks);
  parallel_for(chunks, limits.threads, [&](std::uint64_t c) {
    Best local;
    for (std::uint64_t low = 0; low < per_chunk; ++low) {
      const std::uint64_t mask = (c * per_chunk) | low;
      if (mask == 0) continue;
      const Potential val = value_of(mask);
      if (local.mask == 0 || val < local.value || (val == local.value && lex_less(mask, local.mask))) {
        local = {val, mask};
      }
    }
    best[c] = local;
  });

  Best overall;
  for (const Best& cand : best) {
    if (cand.mask == 0) continue;
    if (overall.mask == 0 || cand.value < overall.value ||
        (cand.value == overall.value && lex_less(cand.mask, overall.mask))) {
      overall = cand;
    }
  }
  GraphPotential out;
  out.value = overall.value;
  for (Vertex v = 0; v < n; ++v) {
    if ((overall.mask >> v) & 1U) out.argmin.push_back(v);
  }
  return out;
}

Potential potential_threshold(const DefectParams& p) {
  const Regime r = regime(p);
  if (r == Regime::IPlusOne) return -1;
  return weight_w(p, p.j + 1);
}

std::int64_t EdgeBound::ceil() const {
  const std::int64_t q = numerator / denominator;
  return (numerator % denominator != 0 && numerator > 0) ? q + 1 : q;
}

EdgeBound edge_bound(const DefectParams& p, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("edge bound needs n >= 1");
  const std::int64_t i = p.i;
  const std::int64_t j = p.j;
  switch (regime(p)) {
    case Regime::ZeroJ: return {n + j, 1};
    case Regime::Large: return {(2 * i + 1) * n - (2 * i - j), i + 1};
    case Regime::Mid: return {2 * j * n + 2, j + 1};
    case Regime::IPlusOne: return {(2 * i * i + 4 * i + 1) * n + 1, i * i + 3 * i + 1};
    case Regime::Equal: return {(2 * i + 2) * n, i + 2};
    case Regime::ZeroZero: break;
  }
  throw std::invalid_argument("no edge bound is available for (0,0)");
}

}  // namespace dpc
