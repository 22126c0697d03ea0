#include "oclique/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oclique {

WeakDistance WeakDistance::finite(std::uint64_t v) {
  if (v == kInf) throw std::invalid_argument("WeakDistance: value reserved");
  return WeakDistance(v);
}

std::uint64_t WeakDistance::value() const {
  if (is_infinite()) throw std::logic_error("WeakDistance: infinite");
  return v_;
}

std::string WeakDistance::str() const {
  return is_infinite() ? "infinity" : std::to_string(v_);
}

OrientedGraph::OrientedGraph(std::size_t n)
    : n_(n), out_(n, Bitset(n)), in_(n, Bitset(n)) {}

OrientedGraph OrientedGraph::from_arcs(std::size_t n,
                                       const std::vector<Arc>& arcs) {
  OrientedGraph g(n);
  for (const Arc& a : arcs) {
    g.require_vertex(a.from);
    g.require_vertex(a.to);
    if (a.from == a.to)
      throw std::invalid_argument("self-arc " + std::to_string(a.from));
    if (g.has_arc(a.from, a.to))
      throw std::invalid_argument("duplicate arc " + std::to_string(a.from) +
                                  "->" + std::to_string(a.to));
    if (g.has_arc(a.to, a.from))
      throw std::invalid_argument("opposite arcs between " +
                                  std::to_string(a.from) + " and " +
                                  std::to_string(a.to));
    g.add_arc_unchecked(a.from, a.to);
  }
  return g;
}

void OrientedGraph::require_vertex(Vertex v) const {
  if (v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n_));
}

bool OrientedGraph::has_arc(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  return out_[u].test(v);
}

bool OrientedGraph::adjacent(Vertex u, Vertex v) const {
  return has_arc(u, v) || out_[v].test(u);
}

const Bitset& OrientedGraph::out(Vertex v) const {
  require_vertex(v);
  return out_[v];
}

const Bitset& OrientedGraph::in(Vertex v) const {
  require_vertex(v);
  return in_[v];
}

void OrientedGraph::add_arc_unchecked(Vertex u, Vertex v) {
  out_[u].set(v);
  in_[v].set(u);
  ++m_;
}

OrientedGraph OrientedGraph::add_arc(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("self-arc rejected");
  if (out_[u].test(v)) throw std::invalid_argument("duplicate arc rejected");
  if (out_[v].test(u))
    throw std::invalid_argument("opposite arc already present");
  OrientedGraph g(*this);
  g.add_arc_unchecked(u, v);
  return g;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> all;
  all.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    out_[u].for_each([&](std::size_t v) { all.push_back({u, v}); });
  return all;  // for_each ascends, u ascends: already (from, to) sorted
}

void OrientedGraph::check_consistency() const {
  if (out_.size() != n_ || in_.size() != n_)
    throw std::logic_error("row count mismatch");
  ArcCount m = 0;
  for (Vertex u = 0; u < n_; ++u) {
    if (out_[u].size() != n_ || in_[u].size() != n_)
      throw std::logic_error("row width mismatch");
    if (out_[u].test(u) || in_[u].test(u)) throw std::logic_error("self-arc");
    m += out_[u].count();
    for (Vertex v = 0; v < n_; ++v) {
      if (out_[u].test(v) != in_[v].test(u))
        throw std::logic_error("transpose inconsistency");
      if (out_[u].test(v) && out_[v].test(u))
        throw std::logic_error("opposite arc pair");
    }
  }
  if (m != m_) throw std::logic_error("arc count drift");
}

bool sees(const OrientedGraph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("sees: distinct vertices required");
  if (g.adjacent(u, v)) return true;
  return g.out(u).intersects(g.in(v)) || g.out(v).intersects(g.in(u));
}

WeakDistance weak_diameter(const OrientedGraph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return WeakDistance::finite(0);

  constexpr std::uint64_t kUnreached = ~std::uint64_t{0};
  std::vector<std::vector<std::uint64_t>> dist(
      n, std::vector<std::uint64_t>(n, kUnreached));
  std::vector<Vertex> frontier, next;
  for (Vertex s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    frontier.assign(1, s);
    while (!frontier.empty()) {
      next.clear();
      for (Vertex u : frontier)
        g.out(u).for_each([&](std::size_t w) {
          if (d[w] == kUnreached) {
            d[w] = d[u] + 1;
            next.push_back(w);
          }
        });
      frontier.swap(next);
    }
  }

  std::uint64_t worst = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t d = std::min(dist[u][v], dist[v][u]);
      if (d == kUnreached) return WeakDistance::infinite();
      worst = std::max(worst, d);
    }
  return WeakDistance::finite(worst);
}

bool is_absolute_clique(const OrientedGraph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!sees(g, u, v)) return false;
  return true;
}

OrientedGraph push(const OrientedGraph& g, Vertex x) {
  g.require_vertex(x);
  OrientedGraph h(g.order());
  for (const Arc& a : g.arcs()) {
    if (a.from == x || a.to == x)
      h.add_arc_unchecked(a.to, a.from);
    else
      h.add_arc_unchecked(a.from, a.to);
  }
  return h;
}

bool is_source(const OrientedGraph& g, Vertex v) { return g.in(v).none(); }

bool agree_on_common_neighbors(const OrientedGraph& g, Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("agree: distinct vertices required");
  if (g.adjacent(a, b))
    throw std::invalid_argument("agree: defined for non-adjacent pairs");
  // A disagreeing witness is a 2-path between a and b in either direction.
  return !g.out(a).intersects(g.in(b)) && !g.out(b).intersects(g.in(a));
}

OrientedGraph merge(const OrientedGraph& g, Vertex a, Vertex b) {
  if (!agree_on_common_neighbors(g, a, b))
    throw std::invalid_argument("merge: pair must agree on common neighbors");
  const std::size_t n = g.order();
  // Survivors keep relative order; the merged vertex takes the last label.
  std::vector<Vertex> relabel(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    relabel[v] = (v == a || v == b) ? n - 2 : next++;

  OrientedGraph h(n - 1);
  for (const Arc& arc : g.arcs()) {
    const Vertex u = relabel[arc.from];
    const Vertex v = relabel[arc.to];
    // u == v cannot happen: an arc inside {a, b} would mean adjacency.
    if (h.out_[u].test(v)) continue;  // both endpoints had the neighbor
    if (h.out_[v].test(u))
      throw std::logic_error("merge: agreement check missed a conflict");
    h.add_arc_unchecked(u, v);
  }
  return h;
}

OrientedGraph delete_vertex(const OrientedGraph& g, Vertex x) {
  g.require_vertex(x);
  const std::size_t n = g.order();
  std::vector<Vertex> relabel(n, 0);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (v != x) relabel[v] = next++;

  OrientedGraph h(n - 1);
  for (const Arc& a : g.arcs())
    if (a.from != x && a.to != x)
      h.add_arc_unchecked(relabel[a.from], relabel[a.to]);
  return h;
}

const char* to_string(ShrinkBranch b) {
  return b == ShrinkBranch::merge ? "merge" : "delete-source";
}

namespace {

// After pushing `p` broke cliqueness, find the guaranteed partner: a vertex
// non-adjacent to p, sharing at least one neighbor, agreeing with p, whose
// merge restores a clique. Scans ascending for determinism.
std::optional<Vertex> merge_partner(const OrientedGraph& h, Vertex p) {
  const Bitset reach_p = h.out(p) | h.in(p);
  for (Vertex cand = 0; cand < h.order(); ++cand) {
    if (cand == p || h.adjacent(p, cand)) continue;
    const Bitset reach_c = h.out(cand) | h.in(cand);
    if (!reach_p.intersects(reach_c)) continue;
    if (!agree_on_common_neighbors(h, p, cand)) continue;
    if (is_absolute_clique(merge(h, p, cand))) return cand;
  }
  return std::nullopt;
}

}  // namespace

ShrinkStep shrink_clique(const OrientedGraph& g, Vertex w) {
  if (w >= g.order()) throw std::out_of_range("shrink: vertex out of range");
  if (g.order() < 2)
    throw std::invalid_argument("shrink: order must be at least 2");
  if (!is_absolute_clique(g))
    throw std::invalid_argument("shrink: input must be an absolute clique");

  std::vector<Vertex> in_neighbors;
  g.in(w).for_each([&](std::size_t v) { in_neighbors.push_back(v); });

  OrientedGraph h(g);
  std::size_t pushes = 0;
  for (Vertex p : in_neighbors) {
    h = push(h, p);
    ++pushes;
    if (!is_absolute_clique(h)) {
      const std::optional<Vertex> cand = merge_partner(h, p);
      if (!cand)
        throw std::logic_error(
            "shrink: no merge partner after a clique-breaking push");
      ShrinkStep step{merge(h, p, *cand), ShrinkBranch::merge, pushes,
                      std::make_pair(p, *cand)};
      return step;
    }
  }
  // All pushes preserved cliqueness, so w lost every in-neighbor.
  if (!is_source(h, w))
    throw std::logic_error("shrink: pushed vertex still has in-neighbors");
  return {delete_vertex(h, w), ShrinkBranch::delete_source, pushes,
          std::nullopt};
}

ShrinkStep shrink_clique(const OrientedGraph& g) {
  if (g.order() < 2)
    throw std::invalid_argument("shrink: order must be at least 2");
  Vertex best = 0;
  std::size_t best_deg = g.in_degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    const std::size_t d = g.in_degree(v);
    if (d > best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return shrink_clique(g, best);
}

}  // namespace oclique
