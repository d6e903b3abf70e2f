#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dpc {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loop-free multigraph. Parallel edges are distinct instances whose ids are
// their positions in edges(). Values are immutable; edits return new graphs.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t n, std::vector<Edge> edges);
  explicit Multigraph(std::size_t n) : Multigraph(n, {}) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  std::size_t degree(Vertex v) const;
  // Edge ids incident to v, ascending.
  const std::vector<EdgeId>& incident(Vertex v) const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  // Number of edge instances joining u and v.
  std::size_t multiplicity(Vertex u, Vertex v) const;
  bool has_parallel_edges() const;

  Multigraph with_edge(Vertex u, Vertex v) const;
  Multigraph with_vertices(std::size_t count) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

std::size_t degree(const Multigraph& g, Vertex v);

// Copy of g without edge instance e; later edges shift down by one.
Multigraph delete_edge(const Multigraph& g, EdgeId e);

struct InducedSubgraph {
  Multigraph graph;
  // original[k] is the vertex of the parent graph relabeled to k.
  std::vector<Vertex> original;
};

// Vertices are relabeled in ascending order of their original ids.
InducedSubgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> s);

// The empty graph counts as connected.
bool is_connected(const Multigraph& g);

struct DefectParams {
  int i = 0;
  int j = 0;

  DefectParams() = default;
  DefectParams(int poor_defect, int rich_defect) : i(poor_defect), j(rich_defect) {
    if (i < 0 || j < 0) throw std::invalid_argument("defect bounds must be non-negative");
    if (i > j) throw std::invalid_argument("defect bounds require i <= j");
  }
  friend bool operator==(const DefectParams&, const DefectParams&) = default;
};

// Per-vertex tightening of the defect caps. Scalar toughness applies the same
// t(v) to both sides; Refined carries separate (t_p(v), t_r(v)).
class Toughness {
 public:
  enum class Kind { Scalar, Refined };

  static Toughness scalar(std::vector<int> t);
  static Toughness refined(std::vector<std::pair<int, int>> t);
  static Toughness zero(std::size_t n) { return scalar(std::vector<int>(n, 0)); }
  static Toughness refined_zero(std::size_t n) {
    return refined(std::vector<std::pair<int, int>>(n, {0, 0}));
  }

  Kind kind() const { return kind_; }
  bool is_scalar() const { return kind_ == Kind::Scalar; }
  std::size_t size() const { return poor_.size(); }
  int poor(Vertex v) const { return poor_.at(v); }
  int rich(Vertex v) const { return rich_.at(v); }
  // Scalar value; only meaningful for Kind::Scalar.
  int value(Vertex v) const { return poor_.at(v); }
  bool all_zero() const;

  // Throws std::invalid_argument when a value is outside the range allowed
  // for p, or when the size does not match n.
  void validate(const DefectParams& p, std::size_t n) const;

  friend bool operator==(const Toughness&, const Toughness&) = default;

 private:
  Kind kind_ = Kind::Scalar;
  std::vector<int> poor_;
  std::vector<int> rich_;
};

}  // namespace dpc
