#include "oclique/construct.hpp"

#include <stdexcept>
#include <string>

#include "oclique/sequence.hpp"

namespace oclique {

SplitChoice optimal_split(std::uint64_t n) {
  const auto [a, b] = recurrence_split(n);  // throws below 6
  return {a, b};
}

OrientedGraph base_clique(std::size_t n) {
  if (n < 1 || n > 5)
    throw std::out_of_range("base_clique: defined for 1 <= n <= 5");
  switch (n) {
    case 1:
      return OrientedGraph(1);
    case 2:
      return OrientedGraph::from_arcs(2, {{0, 1}});
    case 3:
      return OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}});
    case 4:
      return OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    default:
      return OrientedGraph::from_arcs(5,
                                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  }
}

namespace {

// Appends the arcs of the order-n family member, all labels shifted by
// `base`. Iterating on explicit work items instead of call recursion keeps
// arc emission in one flat loop.
void append_arcs(std::size_t n, Vertex base, std::vector<Arc>& arcs) {
  if (n <= 5) {
    for (const Arc& a : base_clique(n).arcs())
      arcs.push_back({base + a.from, base + a.to});
    return;
  }
  const auto [n1, n2] = recurrence_split(n);
  const Vertex hub = base + n - 1;
  for (Vertex u = 0; u < n1; ++u) arcs.push_back({base + u, hub});
  for (Vertex v = 0; v < n2; ++v) arcs.push_back({hub, base + n1 + v});
  append_arcs(n1, base, arcs);
  append_arcs(n2, base + n1, arcs);
}

}  // namespace

OrientedGraph hub_clique(std::size_t n) {
  if (n == 0) throw std::domain_error("hub_clique: order must be positive");
  std::vector<Arc> arcs;
  append_arcs(n, 0, arcs);
  return OrientedGraph::from_arcs(n, arcs);
}

bool is_cut_vertex(const OrientedGraph& g, Vertex v) {
  const std::size_t n = g.order();
  if (v >= n) throw std::out_of_range("is_cut_vertex: vertex out of range");
  if (n < 3) return false;

  const Vertex start = (v == 0) ? 1 : 0;
  Bitset visited(n);
  visited.set(start);
  std::vector<Vertex> stack{start};
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    const Bitset nbr = g.out(u) | g.in(u);
    nbr.for_each([&](std::size_t w) {
      if (w != v && !visited.test(w)) {
        visited.set(w);
        ++reached;
        stack.push_back(w);
      }
    });
  }
  return reached < n - 1;
}

FamilyVerification verify_family(std::size_t n_max, std::size_t clique_cap) {
  if (n_max == 0)
    throw std::domain_error("verify_family: n_max must be positive");
  FamilyVerification report;
  report.n_max = n_max;
  report.clique_cap = clique_cap;

  const std::vector<ArcCount> xs = sequence_values(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const OrientedGraph g = hub_clique(n);
    if (g.arc_count() == xs[n]) {
      ++report.arc_checks;
    } else {
      report.failures.push_back(
          "n=" + std::to_string(n) + ": arc count " +
          std::to_string(g.arc_count()) + " != sequence value " +
          std::to_string(xs[n]));
    }
    if (n <= clique_cap) {
      if (is_absolute_clique(g)) {
        ++report.clique_checks;
      } else {
        report.failures.push_back("n=" + std::to_string(n) +
                                  ": not an absolute clique");
      }
      if (n >= 6) {
        const Vertex hub = n - 1;
        const bool deg_ok = g.degree(hub) == n - 1;
        const bool cut_ok = is_cut_vertex(g, hub);
        if (deg_ok && cut_ok) {
          ++report.hub_checks;
        } else {
          report.failures.push_back(
              "n=" + std::to_string(n) + ": hub " +
              (deg_ok ? "" : "degree wrong ") + (cut_ok ? "" : "not a cut vertex"));
        }
      }
    }
  }
  return report;
}

}  // namespace oclique
