#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/graph.hpp"
#include "dpc/limits.hpp"

namespace dpc {

// Branch-and-bound search for (i,j,t)-colorings of one graph, reusable across
// many covers. Vertices are branched in descending degree order (ties by id),
// Rich before Poor; a branch is cut as soon as an assigned vertex has more
// conflicts than its cap, since conflict counts never drop as more vertices
// are assigned.
class ColoringSearch {
 public:
  ColoringSearch(const Multigraph& g, const DefectParams& p, const Toughness& t,
                 const Limits& limits = {});

  std::optional<PhiMap> solve(const Cover& c) const;
  bool colorable(const Cover& c) const { return solve(c).has_value(); }

  const std::vector<Vertex>& order() const { return order_; }

 private:
  struct Back {
    EdgeId edge;
    std::size_t pos;  // position of the earlier endpoint in order_
  };

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<Back>> back_;      // per order position
  std::vector<std::array<int, 2>> caps_;     // per order position, indexed by Side
};

std::optional<PhiMap> exhaustive_color(const Multigraph& g, const Cover& c, const DefectParams& p,
                                       const Toughness& t, const Limits& limits = {});
std::optional<PhiMap> exhaustive_color(const Multigraph& g, const Cover& c, const DefectParams& p,
                                       const Limits& limits = {});

// Repair heuristic for the symmetric (i,i) problem with zero toughness.
// Starts from all-Rich and flips the lowest-id vertex with at least i+1
// conflicts while that strictly lowers the number of conflicting edges.
// Succeeds whenever every vertex has degree at most 2i+1.
std::optional<PhiMap> greedy_color(const Multigraph& g, const Cover& c, int i);

struct Colorability {
  bool colorable = true;
  // Lexicographically first cover with no coloring.
  std::optional<Cover> witness;
  std::uint64_t witness_index = 0;
};

Colorability is_colorable(const Multigraph& g, const DefectParams& p, const Toughness& t,
                          const Limits& limits = {});
Colorability is_colorable(const Multigraph& g, const DefectParams& p, const Limits& limits = {});

// Some v outside a_set with (i+1)·d_A(v) + d_B(v) >= 2i+2, lowest id first.
std::optional<Vertex> partition_witness(const Multigraph& g, int i, std::span<const Vertex> a_set);

}  // namespace dpc
