#include <array>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oclique/search.hpp"
#include "oclique/sequence.hpp"
#include "test_support.hpp"

using namespace oclique;

TEST_CASE("lower_bound_seed matches the hand-computed table") {
  const std::array<ArcCount, 11> expected{0, 0, 1, 2, 3, 4, 5, 7, 8, 10, 12};
  for (std::size_t n = 0; n <= 10; ++n) CHECK(lower_bound_seed(n) == expected[n]);
}

TEST_CASE("pair indexing is lexicographic") {
  CHECK(pair_count(0) == 0);
  CHECK(pair_count(1) == 0);
  CHECK(pair_count(4) == 6);
  CHECK(pair_count(32) == 496);

  CHECK(pair_at(4, 0) == std::pair<Vertex, Vertex>{0, 1});
  CHECK(pair_at(4, 2) == std::pair<Vertex, Vertex>{0, 3});
  CHECK(pair_at(4, 3) == std::pair<Vertex, Vertex>{1, 2});
  CHECK(pair_at(4, 5) == std::pair<Vertex, Vertex>{2, 3});

  // Every index round-trips through the block layout.
  std::size_t idx = 0;
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v, ++idx)
      CHECK(pair_at(9, idx) == std::pair<Vertex, Vertex>{u, v});

  CHECK_THROWS_AS(pair_at(4, 6), std::out_of_range);
  CHECK_THROWS_AS(pair_at(0, 0), std::out_of_range);
}

namespace {

// State after deciding the first `decided` pairs of an n-vertex search,
// with the given arcs placed among them.
SearchState make_state(std::size_t n, ArcCount budget, std::size_t decided,
                       const std::vector<Arc>& arcs) {
  SearchState s;
  s.n = n;
  s.budget = budget;
  s.next_pair = decided;
  s.arcs_used = arcs.size();
  for (const Arc& a : arcs) {
    s.out[a.from] |= std::uint32_t{1} << a.to;
    s.in[a.to] |= std::uint32_t{1} << a.from;
  }
  return s;
}

}  // namespace

TEST_CASE("prune fires on each bound independently") {
  SUBCASE("budget exceeded") {
    const SearchState s = make_state(3, 1, 2, {{0, 1}, {0, 2}});
    CHECK(prune(s));
  }
  SUBCASE("more arcs required than pairs undecided") {
    const SearchState s = make_state(3, 3, 2, {});
    CHECK(prune(s));
  }
  SUBCASE("counting bound: unseeing pairs exceed remaining coverage") {
    // Budget spent after one arc; five pairs still unseeing.
    const SearchState s = make_state(4, 1, 1, {{0, 1}});
    CHECK(prune(s));
  }
  SUBCASE("complete vertices that do not see each other") {
    // Pairs through 0 and 1 all decided; 0 and 1 are non-adjacent with no
    // common neighbor in either orientation, yet budget and counting both
    // still pass.
    const SearchState s = make_state(4, 3, 5, {{0, 3}, {1, 3}});
    CHECK(prune(s));
  }
  SUBCASE("viable fresh and partial states survive") {
    CHECK_FALSE(prune(make_state(4, 3, 0, {})));
    CHECK_FALSE(prune(make_state(4, 4, 1, {{0, 1}})));
  }
  SUBCASE("decided unseeing pair cuts the all-pairs-assigned leaf") {
    const SearchState s = make_state(3, 1, 3, {{0, 1}});
    CHECK(prune(s));
  }
}

TEST_CASE("search agrees with unpruned enumeration through n = 5") {
  const std::array<ArcCount, 6> expected{0, 0, 1, 2, 4, 5};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto [brute_value, brute_witness] = testsupport::brute_minimum(n);
    CHECK(brute_value == expected[n]);
    CHECK(brute_witness.arc_count() == expected[n]);
    CHECK(is_absolute_clique(brute_witness));

    SearchConfig cfg;
    cfg.n = n;
    const SearchOutcome out = f2_exact(cfg);
    CHECK(out.found());
    CHECK(out.exhaustive);
    CHECK(out.f2 == brute_value);
    CHECK(out.witness->order() == n);
    CHECK(out.witness->arc_count() == brute_value);
    CHECK(is_absolute_clique(*out.witness));
  }
}

TEST_CASE("six vertices need eight arcs") {
  SearchConfig cfg;
  cfg.n = 6;
  const SearchOutcome out = f2_exact(cfg);
  CHECK(out.found());
  CHECK(out.exhaustive);
  CHECK(out.f2 == 8);
  CHECK(is_absolute_clique(*out.witness));
  CHECK(out.witness->arc_count() == 8);

  // Iterative deepening walked m = 5, 6, 7 to completion before finding 8.
  REQUIRE(out.rounds.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(out.rounds[i].m == 5 + i);
    CHECK_FALSE(out.rounds[i].found);
    CHECK(out.rounds[i].completed);
  }
  CHECK(out.rounds[3].m == 8);
  CHECK(out.rounds[3].found);
  CHECK(out.nodes_explored > 0);
}

TEST_CASE("budget windows behave as documented") {
  SUBCASE("window below the minimum exhausts without a find") {
    SearchConfig cfg;
    cfg.n = 4;
    cfg.m_end = 3;
    const SearchOutcome out = f2_exact(cfg);
    CHECK_FALSE(out.found());
    CHECK(out.exhaustive);
    REQUIRE(out.rounds.size() == 1);
    CHECK(out.rounds[0].m == 3);
    CHECK(out.rounds[0].completed);
  }
  SUBCASE("window above the minimum finds the tournament") {
    SearchConfig cfg;
    cfg.n = 4;
    cfg.m_start = 6;
    cfg.m_end = 6;
    const SearchOutcome out = f2_exact(cfg);
    CHECK(out.found());
    CHECK(out.f2 == 6);
    CHECK(out.witness->arc_count() == 6);
    CHECK(is_absolute_clique(*out.witness));
  }
  SUBCASE("empty window is vacuous and exhaustive") {
    SearchConfig cfg;
    cfg.n = 4;
    cfg.m_start = 6;  // default upper end is 4
    const SearchOutcome out = f2_exact(cfg);
    CHECK_FALSE(out.found());
    CHECK(out.exhaustive);
    CHECK(out.rounds.empty());
  }
  SUBCASE("window below the seed is clamped to emptiness") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.m_start = 0;
    cfg.m_end = 0;  // lower_bound_seed(3) == 2, so nothing is searched
    cfg.parallel = true;
    cfg.threads = 4;
    const SearchOutcome out = f2_exact(cfg);
    CHECK_FALSE(out.found());
    CHECK(out.exhaustive);
    CHECK(out.rounds.empty());
  }
  SUBCASE("zero-arc and single-pair rounds run in parallel mode") {
    SearchConfig cfg;
    cfg.n = 1;
    cfg.parallel = true;
    cfg.threads = 4;
    const SearchOutcome one = f2_exact(cfg);
    CHECK(one.found());
    CHECK(one.f2 == 0);
    CHECK(one.witness->order() == 1);

    cfg.n = 2;
    const SearchOutcome two = f2_exact(cfg);
    CHECK(two.found());
    CHECK(two.f2 == 1);
  }
}

TEST_CASE("node budget truncates honestly") {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.node_budget = 10;
  const SearchOutcome out = f2_exact(cfg);
  CHECK_FALSE(out.found());
  CHECK_FALSE(out.exhaustive);
}

TEST_CASE("parallel rounds return the serial values") {
  for (std::size_t n : {4, 5, 6}) {
    SearchConfig serial;
    serial.n = n;
    const SearchOutcome s = f2_exact(serial);

    SearchConfig par = serial;
    par.parallel = true;
    par.threads = 4;
    const SearchOutcome p = f2_exact(par);

    CHECK(p.found());
    CHECK(p.exhaustive);
    CHECK(p.f2 == s.f2);
    CHECK(is_absolute_clique(*p.witness));
    CHECK(p.witness->arc_count() == p.f2);
  }
}

TEST_CASE("first-row symmetry cut preserves the values") {
  for (std::size_t n : {4, 5, 6}) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.symmetry_cut = true;
    const SearchOutcome out = f2_exact(cfg);
    SequenceTable table;
    CHECK(out.found());
    CHECK(out.exhaustive);
    CHECK(out.f2 == table.value(n));
    CHECK(is_absolute_clique(*out.witness));
  }
}

TEST_CASE("serial search is deterministic") {
  SearchConfig cfg;
  cfg.n = 5;
  const SearchOutcome a = f2_exact(cfg);
  const SearchOutcome b = f2_exact(cfg);
  CHECK(a.f2 == b.f2);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("search rejects out-of-contract configurations") {
  SearchConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(f2_exact(cfg), std::domain_error);
  cfg.n = 33;
  CHECK_THROWS_AS(f2_exact(cfg), std::invalid_argument);
  cfg.n = 9;
  CHECK_THROWS_AS(f2_exact(cfg), std::invalid_argument);

  SearchConfig bad_window;
  bad_window.n = 4;
  bad_window.m_start = 5;
  bad_window.m_end = 4;
  CHECK_THROWS_AS(f2_exact(bad_window), std::invalid_argument);

  // With a budget, orders above 8 are admitted and cut off cleanly.
  SearchConfig capped;
  capped.n = 9;
  capped.node_budget = 1000;
  const SearchOutcome out = f2_exact(capped);
  CHECK_FALSE(out.exhaustive);
}

TEST_CASE("conjecture report matches the sequence through n = 6") {
  SearchConfig base;
  base.parallel = true;
  base.threads = 4;
  const std::vector<ConjectureRow> rows = conjecture_report(6, base);
  REQUIRE(rows.size() == 6);
  const std::array<ArcCount, 7> expected{0, 0, 1, 2, 4, 5, 8};
  for (const ConjectureRow& row : rows) {
    CHECK(row.f2 == expected[row.n]);
    CHECK(row.sequence_value == expected[row.n]);
    CHECK(row.match);
    CHECK(row.exhaustive);
    CHECK(row.witness.has_value());
    CHECK(row.nodes > 0);
  }
  CHECK_THROWS_AS(conjecture_report(0), std::domain_error);
  CHECK_THROWS_AS(conjecture_report(8), std::invalid_argument);
}

TEST_CASE("search values respect the analytic floor and the witness ceiling") {
  SequenceTable table;
  for (std::size_t n = 1; n <= 6; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    const SearchOutcome out = f2_exact(cfg);
    REQUIRE(out.found());
    CHECK(out.f2 >= lower_bound_seed(n));
    CHECK(out.f2 <= table.value(n));
  }
}
