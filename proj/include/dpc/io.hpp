#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dpc/cover.hpp"
#include "dpc/graph.hpp"

namespace dpc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GraphFile {
  Multigraph graph;
  Toughness toughness;
};

// Graph format, '#' starts a comment:
//   graph <n>
//   e <u> <v>          one per edge instance, in edge-id order
//   t <v> <k>          scalar toughness (default 0)
//   t2 <v> <tp> <tr>   refined toughness; never mixed with t lines
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Multigraph& g, const Toughness& t);
void write_graph(std::ostream& out, const Multigraph& g);

// Cover format: "cover <m>" then one "p <edgeId> E|O" line per edge.
Cover read_cover(std::istream& in);
Cover read_cover_file(const std::string& path);
void write_cover(std::ostream& out, const Cover& c);

}  // namespace dpc
