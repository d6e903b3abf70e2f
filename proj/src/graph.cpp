#include "dpc/graph.hpp"

#include <algorithm>
#include <string>

namespace dpc {

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n_ || ed.v >= n_) {
      throw std::out_of_range("edge " + std::to_string(e) + " has an endpoint outside [0, " +
                              std::to_string(n_) + ")");
    }
    if (ed.u == ed.v) throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
}

void Multigraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(n_) + " vertices");
  }
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::size_t Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return incidence_[v].size();
}

const std::vector<EdgeId>& Multigraph::incident(Vertex v) const {
  check_vertex(v);
  return incidence_[v];
}

std::size_t Multigraph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : incidence_[0].size();
  for (const auto& inc : incidence_) best = std::min(best, inc.size());
  return best;
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

std::size_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return static_cast<std::size_t>(std::count_if(
      incidence_[u].begin(), incidence_[u].end(),
      [&](EdgeId e) { return edges_[e].other(u) == v; }));
}

bool Multigraph::has_parallel_edges() const {
  std::vector<std::pair<Vertex, Vertex>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

Multigraph Multigraph::with_edge(Vertex u, Vertex v) const {
  auto edges = edges_;
  edges.push_back({u, v});
  return Multigraph(n_, std::move(edges));
}

Multigraph Multigraph::with_vertices(std::size_t count) const {
  return Multigraph(n_ + count, edges_);
}

std::size_t degree(const Multigraph& g, Vertex v) { return g.degree(v); }

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  if (e >= g.num_edges()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() - 1);
  for (EdgeId k = 0; k < g.num_edges(); ++k) {
    if (k != e) edges.push_back(g.edges()[k]);
  }
  return Multigraph(g.num_vertices(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> s) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(g.num_vertices(), kAbsent);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) throw std::out_of_range("subset vertex out of range");
    relabel[v] = 0;
  }
  InducedSubgraph out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (relabel[v] != kAbsent) {
      relabel[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent) {
      edges.push_back({relabel[e.u], relabel[e.v]});
    }
  }
  out.graph = Multigraph(out.original.size(), std::move(edges));
  return out;
}

bool is_connected(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.edges()[e].other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Toughness Toughness::scalar(std::vector<int> t) {
  Toughness out;
  out.kind_ = Kind::Scalar;
  out.rich_ = t;
  out.poor_ = std::move(t);
  return out;
}

Toughness Toughness::refined(std::vector<std::pair<int, int>> t) {
  Toughness out;
  out.kind_ = Kind::Refined;
  out.poor_.reserve(t.size());
  out.rich_.reserve(t.size());
  for (auto [tp, tr] : t) {
    out.poor_.push_back(tp);
    out.rich_.push_back(tr);
  }
  return out;
}

bool Toughness::all_zero() const {
  auto zero = [](int x) { return x == 0; };
  return std::all_of(poor_.begin(), poor_.end(), zero) &&
         std::all_of(rich_.begin(), rich_.end(), zero);
}

void Toughness::validate(const DefectParams& p, std::size_t n) const {
  if (poor_.size() != n) {
    throw std::invalid_argument("toughness covers " + std::to_string(poor_.size()) +
                                " vertices but the graph has " + std::to_string(n));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (kind_ == Kind::Scalar) {
      if (poor_[v] < 0 || poor_[v] > p.j + 1) {
        throw std::invalid_argument("toughness of vertex " + std::to_string(v) +
                                    " must lie in [0, j+1]");
      }
    } else {
      if (poor_[v] < 0 || poor_[v] > p.i + 1 || rich_[v] < 0 || rich_[v] > p.j + 1) {
        throw std::invalid_argument("refined toughness of vertex " + std::to_string(v) +
                                    " must satisfy 0 <= t_p <= i+1 and 0 <= t_r <= j+1");
      }
    }
  }
}

}  // namespace dpc
