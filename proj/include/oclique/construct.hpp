#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oclique/digraph.hpp"
#include "oclique/types.hpp"

namespace oclique {

struct SplitChoice {
  std::uint64_t n1 = 0;  // the part feeding the hub, n1 >= n2
  std::uint64_t n2 = 0;  // the part fed by the hub
  friend bool operator==(const SplitChoice&, const SplitChoice&) = default;
};

// The recurrence's split of n >= 6 into sub-orders (throws
// std::out_of_range below 6). Tests certify it minimizes
// value(a) + value(b) over all a + b = n - 1.
SplitChoice optimal_split(std::uint64_t n);

// Fixed drawings of the five smallest cliques: empty vertex, one arc,
// directed 2-path, the 4-vertex clique with 4 arcs, the directed 5-cycle.
// Throws std::out_of_range unless 1 <= n <= 5.
OrientedGraph base_clique(std::size_t n);

// The recursive witness family: for n >= 6, two recursively built copies
// of orders optimal_split(n) joined through a fresh hub vertex. Labeling is
// fixed: first copy on [0, n1), second copy shifted to [n1, n1+n2), hub at
// n-1; every first-copy vertex points at the hub and the hub points at
// every second-copy vertex. Deterministic; arc count equals the sequence
// value (tests certify). Throws std::domain_error on n == 0.
OrientedGraph hub_clique(std::size_t n);

// True iff removing v leaves the remaining vertices of the UNDERLYING
// undirected graph in more than one component. False when fewer than two
// vertices remain.
bool is_cut_vertex(const OrientedGraph& g, Vertex v);

struct FamilyVerification {
  std::size_t n_max = 0;
  std::size_t clique_cap = 0;         // clique checks only run up to here
  std::uint64_t arc_checks = 0;       // ns with arc count == sequence value
  std::uint64_t clique_checks = 0;    // ns passing is_absolute_clique
  std::uint64_t hub_checks = 0;       // ns with hub degree n-1 and hub a cut vertex
  std::vector<std::string> failures;  // human-readable, empty on success
  bool passed() const { return failures.empty(); }
};

// For each n in [1, n_max]: arc count must equal the sequence value;
// cliqueness is checked for n <= clique_cap (quadratic cost); hub degree
// n-1 and hub-is-cut-vertex are checked for 6 <= n <= clique_cap.
FamilyVerification verify_family(std::size_t n_max,
                                 std::size_t clique_cap = 512);

}  // namespace oclique
