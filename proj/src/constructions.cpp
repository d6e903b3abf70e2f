#include "dpc/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

namespace {

// Accumulates vertices and parity-tagged edges in construction order.
class Builder {
 public:
  Vertex add_vertex() { return static_cast<Vertex>(n_++); }

  void add_edge(Vertex u, Vertex v, Parity p) {
    edges_.push_back({u, v});
    parities_.push_back(p);
  }

  // One Even and one Odd edge, in that order.
  Vertex flag(Vertex base) {
    const Vertex u = add_vertex();
    add_edge(base, u, Parity::Even);
    add_edge(base, u, Parity::Odd);
    return u;
  }

  void weak_flag(Vertex base, int weight) {
    const Vertex x = add_vertex();
    const Vertex y = add_vertex();
    add_edge(y, base, Parity::Even);
    add_edge(x, y, Parity::Even);
    for (int k = 0; k < weight; ++k) flag(x);
  }

  FamilyInstance finish(Family f, int i, int j, int m) && {
    FamilyInstance out{f, i, j, m, Multigraph(n_, std::move(edges_)), Cover(std::move(parities_)),
                       family_vertex_count(f, i, j, m), family_edge_count(f, i, j, m)};
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Parity> parities_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::ZeroJ: return "zeroj";
    case Family::Large: return "large";
    case Family::Mid: return "mid";
    case Family::IPlusOne: return "iplusone";
    case Family::Equal: return "equal";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::ZeroJ, Family::Large, Family::Mid, Family::IPlusOne, Family::Equal}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::pair<Multigraph, Vertex> attach_flag(const Multigraph& g, Vertex base) {
  if (base >= g.num_vertices()) throw std::out_of_range("flag base out of range");
  const auto u = static_cast<Vertex>(g.num_vertices());
  auto edges = g.edges();
  edges.push_back({base, u});
  edges.push_back({base, u});
  return {Multigraph(g.num_vertices() + 1, std::move(edges)), u};
}

Multigraph attach_weak_flag(const Multigraph& g, Vertex base, int weight) {
  if (base >= g.num_vertices()) throw std::out_of_range("weak flag base out of range");
  require(weight >= 1, "weak flag weight must be at least 1");
  const auto x = static_cast<Vertex>(g.num_vertices());
  const Vertex y = x + 1;
  auto edges = g.edges();
  edges.push_back({y, base});
  edges.push_back({x, y});
  Vertex next = x + 2;
  for (int k = 0; k < weight; ++k, ++next) {
    edges.push_back({x, next});
    edges.push_back({x, next});
  }
  return Multigraph(next, std::move(edges));
}

FamilyInstance build_zeroj(int j, int m) {
  require(j >= 1, "zeroj needs j >= 1");
  require(m >= 1, "zeroj needs m >= 1");
  Builder b;
  for (int g = 0; g <= m; ++g) b.add_vertex();
  for (int g = 0; g < m; ++g) b.add_edge(g, g + 1, Parity::Odd);
  b.add_edge(m, 0, Parity::Even);
  for (int h = 0; h < j; ++h) {
    const Vertex u = b.add_vertex();
    const Vertex x = b.add_vertex();
    const Vertex y = b.add_vertex();
    b.add_edge(u, x, Parity::Odd);
    b.add_edge(u, y, Parity::Odd);
    b.add_edge(x, y, Parity::Even);
    b.add_edge(u, 0, Parity::Even);
  }
  return std::move(b).finish(Family::ZeroJ, 0, j, m);
}

FamilyInstance build_large(int i, int j, int m) {
  require(i >= 1, "large needs i >= 1");
  require(j >= 2 * i + 1, "large needs j >= 2i+1");
  require(m >= 0, "large needs m >= 0");
  Builder b;
  for (int h = 0; h <= m + 1; ++h) b.add_vertex();  // v_0..v_m, then v = m+1
  const auto tip = static_cast<Vertex>(m + 1);
  for (int h = 0; h < m; ++h) b.add_edge(h, h + 1, Parity::Odd);
  b.add_edge(m, tip, Parity::Even);
  for (int k = 0; k < i + 1; ++k) b.flag(0);
  for (int h = 1; h <= m; ++h) {
    for (int k = 0; k < i; ++k) b.flag(h);
  }
  for (int k = 0; k < j; ++k) b.flag(tip);
  return std::move(b).finish(Family::Large, i, j, m);
}

FamilyInstance build_mid(int i, int j, int m) {
  require(i >= 1 && i + 2 <= j && j <= 2 * i, "mid needs i+2 <= j <= 2i");
  require(m >= 1, "mid needs m >= 1");
  Builder b;
  for (int h = 0; h <= 2 * m; ++h) b.add_vertex();
  for (int h = 1; h <= m; ++h) {
    b.add_edge(2 * h - 2, 2 * h - 1, Parity::Even);
    b.add_edge(2 * h - 1, 2 * h, Parity::Odd);
  }
  for (int h = 0; h <= m; ++h) {
    const int count = (h == 0 || h == m) ? j : j - 1;
    for (int k = 0; k < count; ++k) b.flag(2 * h);
  }
  return std::move(b).finish(Family::Mid, i, j, m);
}

FamilyInstance build_iplusone(int i, int m) {
  require(i >= 1, "iplusone needs i >= 1");
  require(m >= 0, "iplusone needs m >= 0");
  Builder b;
  for (int t = 0; t <= m + 1; ++t) b.add_vertex();
  for (int t = 0; t < m; ++t) b.add_edge(t, t + 1, Parity::Odd);
  b.add_edge(m, m + 1, Parity::Even);
  for (int k = 0; k < i + 1; ++k) b.weak_flag(0, i + 1);
  for (int t = 1; t <= m; ++t) {
    for (int k = 0; k < i; ++k) b.weak_flag(t, i + 1);
  }
  for (int k = 0; k < i + 1; ++k) b.flag(m + 1);
  return std::move(b).finish(Family::IPlusOne, i, i + 1, m);
}

FamilyInstance build_equal(int i, int m) {
  require(i >= 1, "equal needs i >= 1");
  require(m >= 1, "equal needs m >= 1");
  Builder b;
  const int len = 2 * m;
  for (int h = 0; h < len; ++h) b.add_vertex();
  for (int h = 0; h + 1 < len; ++h) b.add_edge(h, h + 1, Parity::Even);
  b.add_edge(len - 1, 0, Parity::Odd);
  for (int h = 0; h < m; ++h) {
    for (int k = 0; k < i; ++k) b.flag(2 * h);
  }
  return std::move(b).finish(Family::Equal, i, i, m);
}

FamilyInstance build_family(Family f, int i, int j, int m) {
  switch (f) {
    case Family::ZeroJ:
      require(i == 0, "zeroj needs i = 0");
      return build_zeroj(j, m);
    case Family::Large: return build_large(i, j, m);
    case Family::Mid: return build_mid(i, j, m);
    case Family::IPlusOne: return build_iplusone(i, m);
    case Family::Equal: return build_equal(i, m);
  }
  throw std::invalid_argument("unknown family");
}

std::int64_t family_vertex_count(Family f, int i_, int j_, int m_) {
  const std::int64_t i = i_;
  const std::int64_t j = j_;
  const std::int64_t m = m_;
  switch (f) {
    case Family::ZeroJ: return 3 * j + m + 1;
    case Family::Large: return (i + 1) * (m + 1) + 2 + j;
    case Family::Mid: return (j + 1) * m + 2 + j;
    case Family::IPlusOne: return (m + 1) * i * i + (3 * m + 4) * i + i + m + 6;
    case Family::Equal: return (i + 2) * m;
  }
  return 0;
}

std::int64_t family_edge_count(Family f, int i_, int j_, int m_) {
  const std::int64_t i = i_;
  const std::int64_t j = j_;
  const std::int64_t m = m_;
  switch (f) {
    case Family::ZeroJ: return family_vertex_count(f, i_, j_, m_) + j;
    case Family::Large: return (2 * i + 1) * (m + 1) + 2 + 2 * j;
    case Family::Mid: return 2 * j * m + 2 * j + 2;
    case Family::IPlusOne: return 2 * (m + 1) * i * i + 4 * (m + 2) * i + m + 7;
    case Family::Equal: return 2 * m + 2 * i * m;
  }
  return 0;
}

}  // namespace dpc
