#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oclique/digraph.hpp"
#include "oclique/types.hpp"

namespace oclique {

// max(ceil((n/2) * log2(n/2)), n-1) for n >= 2, 0 below: the analytic
// floor joined with the connectivity floor. Starting arc budget for the
// exact search.
ArcCount lower_bound_seed(std::size_t n);

struct SearchConfig {
  std::size_t n = 1;
  std::optional<ArcCount> m_start;          // default: lower_bound_seed(n)
  std::optional<ArcCount> m_end;            // default: the known witness size
  std::optional<std::uint64_t> node_budget; // approximate cap on DFS nodes
  bool parallel = false;
  unsigned threads = 0;                     // 0 = hardware concurrency
  bool symmetry_cut = false;                // first-row lex cut, off by default
};

struct RoundStat {
  ArcCount m = 0;
  std::uint64_t nodes = 0;
  bool found = false;
  bool completed = true;  // false when the node budget cut the round short
};

struct SearchOutcome {
  std::size_t n = 0;
  std::optional<OrientedGraph> witness;  // engaged iff a minimum was found
  ArcCount f2 = 0;                       // arc count of the witness
  std::uint64_t nodes_explored = 0;      // total across rounds
  bool exhaustive = true;                // every attempted round fully explored
  std::vector<RoundStat> rounds;
  bool found() const { return witness.has_value(); }
};

// Exact minimum arc count of an n-vertex oriented graph in which every
// vertex pair sees each other. Iterative deepening on the arc budget m:
// for each m from the seed upward, a DFS assigns each vertex pair (in
// lexicographic order) one of {no arc, u->v, v->u} and accepts when the
// budget is spent and no pair is left unseeing. The first feasible m is
// returned with a witness. A budget window excluding the true minimum
// yields found() == false with exhaustive == true.
//
// n is capped at 32 (vertex bitmask width; the practical frontier is far
// lower). Without an explicit node_budget, n > 8 throws
// std::invalid_argument.
SearchOutcome f2_exact(const SearchConfig& cfg);

// Number of vertex pairs, n*(n-1)/2.
std::size_t pair_count(std::size_t n);

// The index-th pair in lexicographic order (0,1),(0,2),...,(n-2,n-1).
std::pair<Vertex, Vertex> pair_at(std::size_t n, std::size_t index);

// Partial assignment: pairs before next_pair are decided, the rest open.
// Adjacency as per-vertex bitmasks.
struct SearchState {
  std::size_t n = 0;
  ArcCount budget = 0;
  std::size_t next_pair = 0;
  ArcCount arcs_used = 0;
  std::array<std::uint32_t, 32> out{};
  std::array<std::uint32_t, 32> in{};
};

// True when the state cannot extend to a witness within budget:
//   (a) counting bound — one arc newly satisfies at most 2n-3 pairs, so
//       unseeing pairs must not exceed (budget - arcs_used) * (2n-3);
//   (b) budget exceeded, or more arcs still required than pairs undecided;
//   (c) two vertices with all their pairs decided that do not see each
//       other.
// The optional first-row symmetry cut lives in the DFS choice loop, not
// here.
bool prune(const SearchState& s);

struct ConjectureRow {
  std::size_t n = 0;
  ArcCount f2 = 0;
  ArcCount sequence_value = 0;
  bool match = false;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::optional<OrientedGraph> witness;
};

// Runs f2_exact for n = 1..n_max and compares against the sequence.
// Guarded the same way as f2_exact: n_max > 7 requires base.node_budget.
std::vector<ConjectureRow> conjecture_report(std::size_t n_max,
                                             const SearchConfig& base = {});

}  // namespace oclique
