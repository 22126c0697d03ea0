#include "oclique/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace oclique {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "malformed integer '" + tok + "'");
  return v;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

OrientedGraph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(is, line)) throw ParseError(1, "empty input");
  ++lineno;
  const auto header = tokens_of(chomp(line));
  if (header.size() != 2)
    throw ParseError(lineno, "expected header 'n m'");
  const std::uint64_t n = parse_u64(header[0], lineno);
  const std::uint64_t m = parse_u64(header[1], lineno);
  if (n > kMaxGraphOrder)
    throw ParseError(lineno, "order " + std::to_string(n) +
                                 " exceeds supported maximum " +
                                 std::to_string(kMaxGraphOrder));
  if (n == 0 && m > 0) throw ParseError(lineno, "arcs on an empty graph");
  if (m > static_cast<std::uint64_t>(n) * (n ? n - 1 : 0) / 2)
    throw ParseError(lineno, "arc count exceeds pair count");

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;  // (u << 32) | v; order < 2^32
  seen.reserve(static_cast<std::size_t>(m) * 2);
  const auto key = [](std::uint64_t u, std::uint64_t v) {
    return (u << 32) | v;
  };
  while (arcs.size() < m) {
    if (!std::getline(is, line))
      throw ParseError(lineno + 1, "unexpected end of input: expected " +
                                       std::to_string(m) + " arcs, got " +
                                       std::to_string(arcs.size()));
    ++lineno;
    const auto toks = tokens_of(chomp(line));
    if (toks.size() != 2)
      throw ParseError(lineno, "expected arc 'u v'");
    const std::uint64_t u = parse_u64(toks[0], lineno);
    const std::uint64_t v = parse_u64(toks[1], lineno);
    if (u >= n || v >= n)
      throw ParseError(lineno, "vertex out of range");
    if (u == v) throw ParseError(lineno, "self-arc");
    if (seen.count(key(u, v))) throw ParseError(lineno, "duplicate arc");
    if (seen.count(key(v, u)))
      throw ParseError(lineno, "opposite arc already present (2-cycle)");
    seen.insert(key(u, v));
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  while (std::getline(is, line)) {
    ++lineno;
    if (!blank(line)) throw ParseError(lineno, "trailing content after arcs");
  }
  return OrientedGraph::from_arcs(static_cast<std::size_t>(n), arcs);
}

OrientedGraph read_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return read_edge_list(f);
}

void write_edge_list(std::ostream& os, const OrientedGraph& g) {
  os << g.order() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) os << a.from << ' ' << a.to << '\n';
}

std::string to_edge_list(const OrientedGraph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

void write_dot(std::ostream& os, const OrientedGraph& g) {
  os << "digraph oclique {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Arc& a : g.arcs())
    os << "  " << a.from << " -> " << a.to << ";\n";
  os << "}\n";
}

std::string to_dot(const OrientedGraph& g) {
  std::ostringstream ss;
  write_dot(ss, g);
  return ss.str();
}

}  // namespace oclique
