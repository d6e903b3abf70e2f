#include "dpc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dpc/parallel.hpp"

namespace dpc {

namespace {

constexpr std::size_t kRich = static_cast<std::size_t>(Side::Rich);
constexpr std::size_t kPoor = static_cast<std::size_t>(Side::Poor);

}  // namespace

ColoringSearch::ColoringSearch(const Multigraph& g, const DefectParams& p, const Toughness& t,
                               const Limits& limits)
    : n_(g.num_vertices()), m_(g.num_edges()) {
  require_within(n_, limits.max_search_vertices, "coloring search over vertices:");
  t.validate(p, n_);

  order_.resize(n_);
  std::iota(order_.begin(), order_.end(), Vertex{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<std::size_t> pos(n_);
  for (std::size_t k = 0; k < n_; ++k) pos[order_[k]] = k;

  back_.resize(n_);
  caps_.resize(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    const Vertex v = order_[k];
    caps_[k][kPoor] = side_cap(p, t, v, Side::Poor);
    caps_[k][kRich] = side_cap(p, t, v, Side::Rich);
    for (EdgeId e : g.incident(v)) {
      const std::size_t other = pos[g.edges()[e].other(v)];
      if (other < k) back_[k].push_back({e, other});
    }
  }
}

std::optional<PhiMap> ColoringSearch::solve(const Cover& c) const {
  if (c.size() != m_) {
    throw std::invalid_argument("cover does not match the searched graph");
  }
  std::vector<Side> side(n_, Side::Rich);
  std::vector<int> conf(n_, 0);
  std::vector<std::size_t> hit;
  hit.reserve(m_);

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == n_) return true;
    for (Side s : {Side::Rich, Side::Poor}) {
      const int cap = caps_[k][static_cast<std::size_t>(s)];
      if (cap < 0) continue;
      side[k] = s;
      conf[k] = 0;
      const std::size_t mark = hit.size();
      bool ok = true;
      for (const Back& b : back_[k]) {
        if (conflicts(c[b.edge], s, side[b.pos])) {
          ++conf[k];
          ++conf[b.pos];
          hit.push_back(b.pos);
          if (conf[b.pos] > caps_[b.pos][static_cast<std::size_t>(side[b.pos])]) ok = false;
        }
      }
      if (conf[k] > cap) ok = false;
      if (ok && self(self, k + 1)) return true;
      for (std::size_t h = mark; h < hit.size(); ++h) --conf[hit[h]];
      hit.resize(mark);
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<Side> sides(n_);
  for (std::size_t k = 0; k < n_; ++k) sides[order_[k]] = side[k];
  return PhiMap(std::move(sides));
}

std::optional<PhiMap> exhaustive_color(const Multigraph& g, const Cover& c, const DefectParams& p,
                                       const Toughness& t, const Limits& limits) {
  check_dimensions(g, c);
  return ColoringSearch(g, p, t, limits).solve(c);
}

std::optional<PhiMap> exhaustive_color(const Multigraph& g, const Cover& c, const DefectParams& p,
                                       const Limits& limits) {
  return exhaustive_color(g, c, p, Toughness::zero(g.num_vertices()), limits);
}

std::optional<PhiMap> greedy_color(const Multigraph& g, const Cover& c, int i) {
  check_dimensions(g, c);
  if (i < 0) throw std::invalid_argument("defect must be non-negative");
  const auto threshold = static_cast<std::size_t>(i) + 1;
  PhiMap phi = PhiMap::all(g.num_vertices(), Side::Rich);
  auto conf = conflict_degrees(g, c, phi);

  // Each flip lowers the conflicting-edge count, so at most |E| flips happen.
  for (;;) {
    Vertex v = 0;
    while (v < g.num_vertices() && conf[v] < threshold) ++v;
    if (v == g.num_vertices()) return phi;

    const std::size_t d = g.degree(v);
    if (d - conf[v] >= conf[v]) return std::nullopt;

    phi.set(v, flip(phi[v]));
    conf[v] = d - conf[v];
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.edges()[e].other(v);
      if (conflicts(c[e], phi[v], phi[u])) {
        ++conf[u];
      } else {
        --conf[u];
      }
    }
  }
}

Colorability is_colorable(const Multigraph& g, const DefectParams& p, const Toughness& t,
                          const Limits& limits) {
  const std::uint64_t count = cover_count(g, limits.max_cover_edges);
  const ColoringSearch search(g, p, t, limits);
  const std::size_t m = g.num_edges();
  auto first_bad = parallel_find_first(count, limits.threads, [&](std::uint64_t k) {
    return !search.colorable(Cover::from_index(m, k));
  });
  Colorability out;
  if (first_bad) {
    out.colorable = false;
    out.witness_index = *first_bad;
    out.witness = Cover::from_index(m, *first_bad);
  }
  return out;
}

Colorability is_colorable(const Multigraph& g, const DefectParams& p, const Limits& limits) {
  return is_colorable(g, p, Toughness::zero(g.num_vertices()), limits);
}

std::optional<Vertex> partition_witness(const Multigraph& g, int i, std::span<const Vertex> a_set) {
  std::vector<bool> in_a(g.num_vertices(), false);
  std::size_t a_size = 0;
  for (Vertex v : a_set) {
    if (v >= g.num_vertices()) throw std::out_of_range("partition vertex out of range");
    if (!in_a[v]) ++a_size;
    in_a[v] = true;
  }
  if (a_size == 0 || a_size == g.num_vertices()) {
    throw std::invalid_argument("partition requires both sides non-empty");
  }
  const long long target = 2LL * i + 2;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_a[v]) continue;
    long long to_a = 0;
    long long to_b = 0;
    for (EdgeId e : g.incident(v)) {
      (in_a[g.edges()[e].other(v)] ? to_a : to_b) += 1;
    }
    if ((i + 1LL) * to_a + to_b >= target) return v;
  }
  return std::nullopt;
}

}  // namespace dpc
