#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "doctest.h"
#include "oclique/sequence.hpp"

using namespace oclique;

TEST_CASE("base values and small hand-unrolled cases") {
  SequenceTable t;
  CHECK(t.value(1) == 0);
  CHECK(t.value(2) == 1);
  CHECK(t.value(3) == 2);
  CHECK(t.value(4) == 4);
  CHECK(t.value(5) == 5);
  // 6 = 5 + v(3) + v(2); 7 = 6 + 2*v(3); 10 = 9 + v(5) + v(4)
  CHECK(t.value(6) == 8);
  CHECK(t.value(7) == 10);
  CHECK(t.value(8) == 13);
  CHECK(t.value(10) == 18);
  CHECK_THROWS_AS(t.value(0), std::domain_error);
}

TEST_CASE("large reference values") {
  SequenceTable t;
  CHECK(t.value(100) == 467);
  CHECK(t.value(1'000) == 7'976);
  CHECK(t.value(10'000) == 112'727);
  CHECK(t.value(100'000) == 1'453'411);
  CHECK(t.value(1'000'000) == 17'927'158);
}

TEST_CASE("three-term route agrees with the split route") {
  SequenceTable t;
  CHECK(t.value_alt(4) == 4);
  CHECK(t.value_alt(6) == 8);
  CHECK(t.value_alt(8) == 13);
  for (std::uint64_t n = 1; n <= 5'000; ++n)
    CHECK(t.value_alt(n) == t.value(n));
}

TEST_CASE("bump indices of the three-term route") {
  // n >= 4 where n or n-1 is 3*2^i.
  const std::vector<std::uint64_t> expected = {4, 6, 7, 12, 13, 24, 25, 48, 49};
  std::vector<std::uint64_t> got;
  for (std::uint64_t n = 4; n <= 50; ++n)
    if (is_three_times_pow2(n) || is_three_times_pow2(n - 1)) got.push_back(n);
  CHECK(got == expected);
}

TEST_CASE("dense table matches the memoized evaluator") {
  const auto xs = sequence_values(20'000);
  SequenceTable t;
  for (std::uint64_t n : {1ull, 2ull, 17ull, 100ull, 999ull, 4'096ull,
                          19'999ull, 20'000ull})
    CHECK(t.value(n) == xs[n]);
}

TEST_CASE("strictly increasing") {
  const auto xs = sequence_values(100'000);
  std::uint64_t first_violation = 0;
  for (std::uint64_t n = 1; n < 100'000; ++n)
    if (!(xs[n] < xs[n + 1])) {
      first_violation = n;
      break;
    }
  CHECK(first_violation == 0);
}

TEST_CASE("determinism and concurrent queries") {
  SequenceTable a, b;
  CHECK(a.value(123'456) == b.value(123'456));
  CHECK(a.value(123'456) == a.value(123'456));

  const auto xs = sequence_values(50'000);
  SequenceTable shared;
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 8; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t n = 1 + w; n <= 50'000; n += 97)
        if (shared.value(n) != xs[n]) ok = false;
    });
  for (auto& th : pool) th.join();
  CHECK(ok.load());
}

TEST_CASE("recurrence split") {
  CHECK(recurrence_split(6) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  CHECK(recurrence_split(7) == std::pair<std::uint64_t, std::uint64_t>{3, 3});
  CHECK(recurrence_split(9) == std::pair<std::uint64_t, std::uint64_t>{5, 3});
  CHECK(recurrence_split(10) == std::pair<std::uint64_t, std::uint64_t>{5, 4});
  CHECK_THROWS_AS(recurrence_split(5), std::out_of_range);
}

TEST_CASE("integer log helpers") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(1024) == 10);
  CHECK(ceil_log2(1025) == 11);
  CHECK_THROWS_AS(ceil_log2(0), std::domain_error);

  CHECK(ceil_log_base(1, 2) == 0);
  CHECK(ceil_log_base(2, 3) == 1);
  CHECK(ceil_log_base(8, 2) == 3);
  CHECK(ceil_log_base(9, 2) == 4);
  CHECK(ceil_log_base(27, 3) == 3);
  CHECK(ceil_log_base(28, 3) == 4);
  CHECK_THROWS_AS(ceil_log_base(5, 1), std::out_of_range);
  CHECK_THROWS_AS(ceil_log_base(0, 2), std::domain_error);
}

TEST_CASE("three-times-power-of-two predicate") {
  for (std::uint64_t n : {3ull, 6ull, 12ull, 24ull, 48ull, 96ull, 768ull})
    CHECK(is_three_times_pow2(n));
  for (std::uint64_t n : {0ull, 1ull, 2ull, 4ull, 5ull, 8ull, 9ull, 10ull,
                          16ull, 36ull})
    CHECK(!is_three_times_pow2(n));
}

TEST_CASE("classical bounds: spot values") {
  CHECK(bound_ks(1) == 0);
  CHECK(bound_ks(8) == 24);
  CHECK(bound_ks(10) == 40);

  CHECK(bound_fhpz(9) == 15);
  CHECK(bound_fhpz(10) == 18);
  // Powers of two evaluate exactly: n*log2(n) - 1.5n is an integer.
  CHECK(bound_fhpz(16) == 40);
  CHECK(bound_fhpz(512) == 3'840);
  CHECK_THROWS_AS(bound_fhpz(8), std::out_of_range);

  CHECK(bound_klss(2, 2) == 1);
  CHECK(bound_klss(4, 2) == 4);
  CHECK(bound_klss(10, 2) == 24);
  CHECK(bound_klss(100, 2) == 651);
  CHECK_THROWS_AS(bound_klss(10, 1), std::out_of_range);
  CHECK_THROWS_AS(bound_klss(0, 2), std::domain_error);
}

TEST_CASE("classical bounds: reference table rows") {
  const std::uint64_t ns[] = {10, 100, 1'000, 10'000, 100'000, 1'000'000};
  const ArcCount ks[] = {40, 700, 10'000, 140'000, 1'700'000, 20'000'000};
  const ArcCount fhpz[] = {18, 514, 8'465, 117'877, 1'510'964, 18'431'568};
  const ArcCount klss[] = {24, 651, 9'900, 139'804, 1'699'711, 19'999'600};
  for (int i = 0; i < 6; ++i) {
    CHECK(bound_ks(ns[i]) == ks[i]);
    CHECK(bound_fhpz(ns[i]) == fhpz[i]);
    CHECK(bound_klss(ns[i], 2) == klss[i]);
  }
}

TEST_CASE("sequence stays under both bounds") {
  const auto xs = sequence_values(5'000);
  for (std::uint64_t n = 9; n <= 5'000; ++n) {
    CHECK(xs[n] <= bound_fhpz(n));
    CHECK(xs[n] <= bound_klss(n, 2));
  }
}

TEST_CASE("analytic lower term") {
  CHECK(half_n_log_lower(0) == 0);
  CHECK(half_n_log_lower(1) == 0);
  CHECK(half_n_log_lower(2) == 0);   // (1) * log2(1)
  CHECK(half_n_log_lower(6) == 5);   // ceil(3 * log2 3) = ceil(4.754..)
  CHECK(half_n_log_lower(8) == 8);   // exact: 4 * 2
  CHECK(half_n_log_lower(10) == 12); // ceil(5 * log2 5) = ceil(11.609..)
}

TEST_CASE("checked arithmetic") {
  const ArcCount top = ~ArcCount{0};
  CHECK(checked_add(3, 4) == 7);
  CHECK(checked_mul(3, 4) == 12);
  CHECK_THROWS_AS(checked_add(top, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(top / 2, 3), std::overflow_error);
  CHECK(checked_mul(0, top) == 0);
}

TEST_CASE("inequality suite holds through 1000") {
  const InequalityReport r = check_sequence_inequalities(1'000);
  CHECK(r.all_passed());
  REQUIRE(r.checks.size() == 6);
  const char* names[] = {"window_exchange", "even_sum_spread",
                         "even_spread_floor", "midpoint_parity",
                         "odd_sum_spread", "odd_spread_floor"};
  for (int i = 0; i < 6; ++i) {
    CHECK(r.checks[i].name == names[i]);
    CHECK(r.checks[i].cases_checked > 0);
    CHECK(!r.checks[i].counterexample.has_value());
  }
  CHECK_THROWS_AS(check_sequence_inequalities(0), std::domain_error);
}

TEST_CASE("midpoint instance at n = 2 is tight") {
  SequenceTable t;
  CHECK(t.value(1) + t.value(3) == 2 * t.value(2));
}
