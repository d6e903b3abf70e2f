#pragma once

#include <cstdint>
#include <vector>

#include "dpc/graph.hpp"
#include "dpc/limits.hpp"

namespace dpc {

// Even joins p(u)p(v) and r(u)r(v); Odd joins p(u)r(v) and r(u)p(v).
enum class Parity : std::uint8_t { Even, Odd };

enum class Side : std::uint8_t { Poor, Rich };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Side flip(Side s) { return s == Side::Poor ? Side::Rich : Side::Poor; }

// A 2-fold cover with one perfect matching per edge instance, stored as the
// matching parities indexed by edge id. The cover graph is never built.
class Cover {
 public:
  Cover() = default;
  explicit Cover(std::vector<Parity> parities) : parities_(std::move(parities)) {}

  static Cover all_even(std::size_t m) { return Cover(std::vector<Parity>(m, Parity::Even)); }
  // Cover number `index` in the lexicographic order of parity vectors with
  // Even < Odd, i.e. edge 0 is the most significant bit.
  static Cover from_index(std::size_t m, std::uint64_t index);

  std::size_t size() const { return parities_.size(); }
  Parity operator[](EdgeId e) const { return parities_[e]; }
  Parity at(EdgeId e) const { return parities_.at(e); }
  const std::vector<Parity>& parities() const { return parities_; }
  Cover with_parity(EdgeId e, Parity p) const;
  Cover without_edge(EdgeId e) const;
  std::uint64_t index() const;

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  std::vector<Parity> parities_;
};

// A Φ-map: the chosen list vertex (poor or rich) of every graph vertex.
class PhiMap {
 public:
  PhiMap() = default;
  explicit PhiMap(std::vector<Side> sides) : sides_(std::move(sides)) {}
  static PhiMap all(std::size_t n, Side s) { return PhiMap(std::vector<Side>(n, s)); }
  static PhiMap from_bits(std::size_t n, std::uint64_t rich_bits);

  std::size_t size() const { return sides_.size(); }
  Side operator[](Vertex v) const { return sides_[v]; }
  Side at(Vertex v) const { return sides_.at(v); }
  void set(Vertex v, Side s) { sides_.at(v) = s; }
  const std::vector<Side>& sides() const { return sides_; }

  friend bool operator==(const PhiMap&, const PhiMap&) = default;

 private:
  std::vector<Side> sides_;
};

// Whether the matching of an edge with parity p joins the chosen list
// vertices on sides a and b.
inline bool conflicts(Parity p, Side a, Side b) { return (p == Parity::Even) == (a == b); }

std::size_t conflict_degree(const Multigraph& g, const Cover& c, const PhiMap& phi, Vertex v);
std::vector<std::size_t> conflict_degrees(const Multigraph& g, const Cover& c, const PhiMap& phi);
// Number of edge instances of H_φ.
std::size_t conflicting_edges(const Multigraph& g, const Cover& c, const PhiMap& phi);

// Defect cap of v on side s: i - t_p(v) or j - t_r(v). May be negative.
int side_cap(const DefectParams& p, const Toughness& t, Vertex v, Side s);

bool is_valid_coloring(const Multigraph& g, const Cover& c, const PhiMap& phi,
                       const DefectParams& p, const Toughness& t);
bool is_valid_coloring(const Multigraph& g, const Cover& c, const PhiMap& phi,
                       const DefectParams& p);

// Number of covers of g, refusing graphs with more than max_edges edges.
std::uint64_t cover_count(const Multigraph& g, std::size_t max_edges = 24);
// All 2^m covers in lexicographic order (Even < Odd).
std::vector<Cover> all_covers(const Multigraph& g, std::size_t max_edges = 24);

void check_dimensions(const Multigraph& g, const Cover& c);
void check_dimensions(const Multigraph& g, const PhiMap& phi);

}  // namespace dpc
