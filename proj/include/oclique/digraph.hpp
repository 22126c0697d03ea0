#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oclique/bitset.hpp"
#include "oclique/types.hpp"

namespace oclique {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Distance under the "shorter of the two directions" metric; possibly
// unreachable in both.
class WeakDistance {
 public:
  static WeakDistance infinite() { return WeakDistance(kInf); }
  static WeakDistance finite(std::uint64_t v);
  bool is_infinite() const { return v_ == kInf; }
  std::uint64_t value() const;  // throws std::logic_error when infinite
  std::string str() const;      // decimal, or "infinity"
  friend bool operator==(const WeakDistance&, const WeakDistance&) = default;

 private:
  explicit WeakDistance(std::uint64_t v) : v_(v) {}
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::uint64_t v_ = 0;
};

// Oriented graph on vertices 0..n-1: no self-arcs, no pair of opposite
// arcs. Both adjacency directions are stored; the two row families stay
// transpose-consistent by construction and check_consistency() can audit
// that from the outside. Value semantics; mutating operations return a new
// graph.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(std::size_t n);

  // Validates every arc (range, self-arc, duplicate, opposite pair).
  static OrientedGraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

  std::size_t order() const { return n_; }
  ArcCount arc_count() const { return m_; }

  bool has_arc(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  const Bitset& out(Vertex v) const;
  const Bitset& in(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out(v).count(); }
  std::size_t in_degree(Vertex v) const { return in(v).count(); }
  std::size_t degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  // Copy with one more arc; throws std::invalid_argument if u->v would
  // break an invariant, std::out_of_range on bad vertices.
  OrientedGraph add_arc(Vertex u, Vertex v) const;

  // All arcs sorted by (from, to).
  std::vector<Arc> arcs() const;

  // Audits size bookkeeping, transpose consistency, self-arcs and 2-cycles;
  // throws std::logic_error on any breach. Meant for tests and post-op
  // sanity checks, not hot paths.
  void check_consistency() const;

  bool operator==(const OrientedGraph&) const = default;

 private:
  void add_arc_unchecked(Vertex u, Vertex v);
  void require_vertex(Vertex v) const;

  std::size_t n_ = 0;
  ArcCount m_ = 0;
  std::vector<Bitset> out_, in_;

  friend OrientedGraph push(const OrientedGraph&, Vertex);
  friend OrientedGraph merge(const OrientedGraph&, Vertex, Vertex);
  friend OrientedGraph delete_vertex(const OrientedGraph&, Vertex);
};

// u sees v: adjacent, or joined by a directed 2-path in either direction.
// Requires u != v.
bool sees(const OrientedGraph& g, Vertex u, Vertex v);

// Max over unordered pairs of the shorter directed distance; 0 for n <= 1,
// infinite when some pair is mutually unreachable.
WeakDistance weak_diameter(const OrientedGraph& g);

// True iff every pair of distinct vertices sees each other; equivalent to
// weak_diameter(g) <= 2 (property-tested).
bool is_absolute_clique(const OrientedGraph& g);

// Reverses every arc incident to x. Involution; pairs not involving x keep
// their seeing relation, so cliqueness can only break at x itself.
OrientedGraph push(const OrientedGraph& g, Vertex x);

// No in-neighbors.
bool is_source(const OrientedGraph& g, Vertex v);

// a and b must be non-adjacent. True iff every common neighbor w relates to
// a and b in the same direction (in-neighbor of both or out-neighbor of
// both).
bool agree_on_common_neighbors(const OrientedGraph& g, Vertex a, Vertex b);

// Replaces the non-adjacent agreeing pair {a, b} by a single vertex whose
// neighborhoods are the unions. The merged vertex takes the LAST label
// (n-2); other vertices keep their relative order. Throws
// std::invalid_argument unless the pair is non-adjacent and agrees.
OrientedGraph merge(const OrientedGraph& g, Vertex a, Vertex b);

// Removes x; remaining vertices keep their relative order.
OrientedGraph delete_vertex(const OrientedGraph& g, Vertex x);

enum class ShrinkBranch { merge, delete_source };
const char* to_string(ShrinkBranch b);

struct ShrinkStep {
  OrientedGraph graph;         // the shrunk clique on n-1 vertices
  ShrinkBranch branch;
  std::size_t pushes_applied = 0;
  // When branch == merge: the pair that was merged, labeled in the pushed
  // graph the merge was applied to.
  std::optional<std::pair<Vertex, Vertex>> merged_pair;
};

// One shrinking step: pushes the in-neighbors of w in ascending label
// order; if some push breaks cliqueness, merges the pushed vertex with an
// agreeing partner (scanned ascending, restoring cliqueness); if all pushes
// go through, w has become a source and is deleted. Either way the result
// is an absolute clique on one fewer vertex with strictly fewer arcs.
//
// Requires is_absolute_clique(g) and order >= 2 (std::invalid_argument
// otherwise); a failure to find the guaranteed merge partner would be a
// contradiction and throws std::logic_error.
ShrinkStep shrink_clique(const OrientedGraph& g, Vertex w);

// Same, choosing w with maximum in-degree (lowest label on ties).
ShrinkStep shrink_clique(const OrientedGraph& g);

}  // namespace oclique
