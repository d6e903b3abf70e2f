#include "dpc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace dpc {

namespace {

constexpr std::size_t kMaxVertices = 1U << 20;

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Reads the next line that has content once comments are stripped.
std::optional<Line> next_line(std::istream& in, std::size_t& counter) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++counter;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{counter, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) return line;
  }
  return std::nullopt;
}

std::size_t number(const Line& line, std::size_t k) {
  const std::string& tok = line.tokens[k];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(arity - 1) +
                                      " arguments");
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  std::size_t counter = 0;
  auto header = next_line(in, counter);
  if (!header) throw ParseError(counter, "missing 'graph <n>' header");
  if (header->tokens[0] != "graph") throw ParseError(header->number, "expected 'graph <n>' header");
  expect_arity(*header, 2);
  const std::size_t n = number(*header, 1);
  if (n > kMaxVertices) throw ParseError(header->number, "vertex count too large");

  std::vector<Edge> edges;
  std::vector<int> scalar(n, 0);
  std::vector<std::pair<int, int>> refined(n, {0, 0});
  std::vector<bool> seen(n, false);
  bool has_scalar = false;
  bool has_refined = false;

  auto vertex = [&](const Line& line, std::size_t k) {
    const std::size_t v = number(line, k);
    if (v >= n) throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range");
    return static_cast<Vertex>(v);
  };
  auto toughness = [&](const Line& line, std::size_t k) {
    const std::size_t value = number(line, k);
    if (value > kMaxVertices) throw ParseError(line.number, "toughness value too large");
    return static_cast<int>(value);
  };
  auto mark = [&](const Line& line, Vertex v) {
    if (seen[v]) throw ParseError(line.number, "duplicate toughness for vertex " + std::to_string(v));
    seen[v] = true;
  };

  while (auto line = next_line(in, counter)) {
    const std::string& kind = line->tokens[0];
    if (kind == "e") {
      expect_arity(*line, 3);
      const Vertex u = vertex(*line, 1);
      const Vertex v = vertex(*line, 2);
      if (u == v) throw ParseError(line->number, "loops are not allowed");
      edges.push_back({u, v});
    } else if (kind == "t") {
      expect_arity(*line, 3);
      if (has_refined) throw ParseError(line->number, "'t' and 't2' lines cannot be mixed");
      has_scalar = true;
      const Vertex v = vertex(*line, 1);
      mark(*line, v);
      scalar[v] = toughness(*line, 2);
    } else if (kind == "t2") {
      expect_arity(*line, 4);
      if (has_scalar) throw ParseError(line->number, "'t' and 't2' lines cannot be mixed");
      has_refined = true;
      const Vertex v = vertex(*line, 1);
      mark(*line, v);
      refined[v] = {toughness(*line, 2), toughness(*line, 3)};
    } else if (kind == "graph") {
      throw ParseError(line->number, "duplicate 'graph' header");
    } else {
      throw ParseError(line->number, "unknown directive '" + kind + "'");
    }
  }

  return GraphFile{Multigraph(n, std::move(edges)),
                   has_refined ? Toughness::refined(std::move(refined))
                               : Toughness::scalar(std::move(scalar))};
}

GraphFile read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g, const Toughness& t) {
  out << "graph " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (t.size() != g.num_vertices()) return;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!t.is_scalar()) {
      out << "t2 " << v << ' ' << t.poor(v) << ' ' << t.rich(v) << '\n';
    } else if (t.value(v) != 0) {
      out << "t " << v << ' ' << t.value(v) << '\n';
    }
  }
}

void write_graph(std::ostream& out, const Multigraph& g) {
  write_graph(out, g, Toughness::zero(g.num_vertices()));
}

Cover read_cover(std::istream& in) {
  std::size_t counter = 0;
  auto header = next_line(in, counter);
  if (!header) throw ParseError(counter, "missing 'cover <m>' header");
  if (header->tokens[0] != "cover") throw ParseError(header->number, "expected 'cover <m>' header");
  expect_arity(*header, 2);
  const std::size_t m = number(*header, 1);
  if (m > kMaxVertices) throw ParseError(header->number, "edge count too large");

  std::vector<Parity> parities(m, Parity::Even);
  std::vector<bool> seen(m, false);
  while (auto line = next_line(in, counter)) {
    if (line->tokens[0] != "p") {
      throw ParseError(line->number, "unknown directive '" + line->tokens[0] + "'");
    }
    expect_arity(*line, 3);
    const std::size_t e = number(*line, 1);
    if (e >= m) throw ParseError(line->number, "edge id " + std::to_string(e) + " out of range");
    if (seen[e]) throw ParseError(line->number, "duplicate parity for edge " + std::to_string(e));
    const std::string& p = line->tokens[2];
    if (p == "E") {
      parities[e] = Parity::Even;
    } else if (p == "O") {
      parities[e] = Parity::Odd;
    } else {
      throw ParseError(line->number, "parity must be E or O, got '" + p + "'");
    }
    seen[e] = true;
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (!seen[e]) throw ParseError(counter, "missing parity for edge " + std::to_string(e));
  }
  return Cover(std::move(parities));
}

Cover read_cover_file(const std::string& path) {
  auto in = open(path);
  return read_cover(in);
}

void write_cover(std::ostream& out, const Cover& c) {
  out << "cover " << c.size() << '\n';
  for (EdgeId e = 0; e < c.size(); ++e) {
    out << "p " << e << ' ' << (c[e] == Parity::Even ? 'E' : 'O') << '\n';
  }
}

}  // namespace dpc
