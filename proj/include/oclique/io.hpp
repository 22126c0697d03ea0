#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "oclique/digraph.hpp"

namespace oclique {

// Largest graph order the dense adjacency representation is allowed to
// reach through I/O or the CLI (order^2/4 bytes per graph).
inline constexpr std::size_t kMaxGraphOrder = 20'000;

// Raised on any defect in an edge-list stream; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list format:
//   line 1: "n m"
//   then exactly m lines "u v" (arc u->v, 0-based, u != v)
// Rejects malformed tokens, out-of-range vertices, self-arcs, duplicate
// arcs, opposite pairs, wrong arc counts, and trailing garbage. Blank lines
// are only tolerated after the last arc.
OrientedGraph read_edge_list(std::istream& is);
OrientedGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& os, const OrientedGraph& g);
std::string to_edge_list(const OrientedGraph& g);

// DOT: one node statement per vertex (isolated vertices survive a
// round-trip through other tools), then arcs sorted by (from, to).
void write_dot(std::ostream& os, const OrientedGraph& g);
std::string to_dot(const OrientedGraph& g);

}  // namespace oclique
