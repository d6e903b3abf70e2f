#include "dpc/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dpc/limits.hpp"

namespace dpc {

Cover Cover::from_index(std::size_t m, std::uint64_t index) {
  if (m < 64 && (index >> m) != 0) throw std::out_of_range("cover index out of range");
  std::vector<Parity> parities(m, Parity::Even);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t bit = m - 1 - e;
    if (bit < 64 && ((index >> bit) & 1U)) parities[e] = Parity::Odd;
  }
  return Cover(std::move(parities));
}

Cover Cover::with_parity(EdgeId e, Parity p) const {
  auto parities = parities_;
  parities.at(e) = p;
  return Cover(std::move(parities));
}

Cover Cover::without_edge(EdgeId e) const {
  auto parities = parities_;
  parities.erase(parities.begin() + static_cast<std::ptrdiff_t>(e));
  return Cover(std::move(parities));
}

std::uint64_t Cover::index() const {
  if (parities_.size() > 64) throw std::out_of_range("cover too large to index");
  std::uint64_t k = 0;
  for (Parity p : parities_) k = (k << 1) | (p == Parity::Odd ? 1U : 0U);
  return k;
}

PhiMap PhiMap::from_bits(std::size_t n, std::uint64_t rich_bits) {
  std::vector<Side> sides(n, Side::Poor);
  for (std::size_t v = 0; v < n && v < 64; ++v) {
    if ((rich_bits >> v) & 1U) sides[v] = Side::Rich;
  }
  return PhiMap(std::move(sides));
}

void check_dimensions(const Multigraph& g, const Cover& c) {
  if (c.size() != g.num_edges()) {
    throw std::invalid_argument("cover has " + std::to_string(c.size()) +
                                " parities but the graph has " + std::to_string(g.num_edges()) +
                                " edges");
  }
}

void check_dimensions(const Multigraph& g, const PhiMap& phi) {
  if (phi.size() != g.num_vertices()) {
    throw std::invalid_argument("map has " + std::to_string(phi.size()) +
                                " entries but the graph has " + std::to_string(g.num_vertices()) +
                                " vertices");
  }
}

std::size_t conflict_degree(const Multigraph& g, const Cover& c, const PhiMap& phi, Vertex v) {
  check_dimensions(g, c);
  check_dimensions(g, phi);
  std::size_t count = 0;
  for (EdgeId e : g.incident(v)) {
    if (conflicts(c[e], phi[v], phi[g.edges()[e].other(v)])) ++count;
  }
  return count;
}

std::vector<std::size_t> conflict_degrees(const Multigraph& g, const Cover& c, const PhiMap& phi) {
  check_dimensions(g, c);
  check_dimensions(g, phi);
  std::vector<std::size_t> out(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    if (conflicts(c[e], phi[ed.u], phi[ed.v])) {
      ++out[ed.u];
      ++out[ed.v];
    }
  }
  return out;
}

std::size_t conflicting_edges(const Multigraph& g, const Cover& c, const PhiMap& phi) {
  check_dimensions(g, c);
  check_dimensions(g, phi);
  std::size_t count = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    if (conflicts(c[e], phi[ed.u], phi[ed.v])) ++count;
  }
  return count;
}

int side_cap(const DefectParams& p, const Toughness& t, Vertex v, Side s) {
  return s == Side::Poor ? p.i - t.poor(v) : p.j - t.rich(v);
}

bool is_valid_coloring(const Multigraph& g, const Cover& c, const PhiMap& phi,
                       const DefectParams& p, const Toughness& t) {
  t.validate(p, g.num_vertices());
  const auto degrees = conflict_degrees(g, c, phi);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (static_cast<long long>(degrees[v]) > side_cap(p, t, v, phi[v])) return false;
  }
  return true;
}

bool is_valid_coloring(const Multigraph& g, const Cover& c, const PhiMap& phi,
                       const DefectParams& p) {
  return is_valid_coloring(g, c, phi, p, Toughness::zero(g.num_vertices()));
}

std::uint64_t cover_count(const Multigraph& g, std::size_t max_edges) {
  require_within(g.num_edges(), std::min<std::size_t>(max_edges, 63), "cover enumeration over edges:");
  return std::uint64_t{1} << g.num_edges();
}

std::vector<Cover> all_covers(const Multigraph& g, std::size_t max_edges) {
  const std::uint64_t count = cover_count(g, max_edges);
  std::vector<Cover> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(Cover::from_index(g.num_edges(), k));
  return out;
}

}  // namespace dpc
