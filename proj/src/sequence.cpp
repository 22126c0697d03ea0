#include "oclique/sequence.hpp"

#include <mpfr.h>

#include <bit>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace oclique {

namespace {

constexpr ArcCount kBaseValues[6] = {0, 0, 1, 2, 4, 5};  // slots 1..5

// Largest argument the transcendental-bound bracketing accepts; keeps every
// intermediate product inside 64 bits with room to spare.
constexpr std::uint64_t kMaxBracketArg = 1'000'000'000'000'000ull;

}  // namespace

ArcCount checked_add(ArcCount a, ArcCount b) {
  if (std::numeric_limits<ArcCount>::max() - a < b)
    throw std::overflow_error("arc-count addition overflow");
  return a + b;
}

ArcCount checked_mul(ArcCount a, ArcCount b) {
  if (a != 0 && std::numeric_limits<ArcCount>::max() / a < b)
    throw std::overflow_error("arc-count multiplication overflow");
  return a * b;
}

std::uint64_t ceil_log2(std::uint64_t n) {
  if (n == 0) throw std::domain_error("ceil_log2: argument must be positive");
  return n == 1 ? 0 : std::bit_width(n - 1);
}

std::uint64_t ceil_log_base(std::uint64_t n, std::uint64_t d) {
  if (n == 0)
    throw std::domain_error("ceil_log_base: argument must be positive");
  if (d < 2) throw std::out_of_range("ceil_log_base: base must be >= 2");
  std::uint64_t k = 0, p = 1;
  while (p < n) {
    if (p > std::numeric_limits<std::uint64_t>::max() / d) return k + 1;
    p *= d;
    ++k;
  }
  return k;
}

bool is_three_times_pow2(std::uint64_t n) {
  while (n > 3 && n % 2 == 0) n /= 2;
  return n == 3;
}

std::pair<std::uint64_t, std::uint64_t> recurrence_split(std::uint64_t n) {
  if (n < 6) throw std::out_of_range("recurrence_split: defined for n >= 6");
  switch (n % 4) {
    case 1:
      return {(n + 1) / 2, (n - 3) / 2};
    case 3:
      return {(n - 1) / 2, (n - 1) / 2};
    default:
      return {n / 2, (n - 2) / 2};
  }
}

ArcCount SequenceTable::value(std::uint64_t n) {
  if (n == 0)
    throw std::domain_error("sequence index must be positive");
  std::lock_guard<std::mutex> lock(mu_);
  return value_locked(n);
}

ArcCount SequenceTable::value_locked(std::uint64_t n) {
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  // Iterative post-order over the (sparse) dependency dag; recursion depth
  // would be fine at O(log n) but the loop also dodges repeated map walks.
  std::vector<std::uint64_t> work{n};
  while (!work.empty()) {
    const std::uint64_t k = work.back();
    if (memo_.contains(k)) {
      work.pop_back();
      continue;
    }
    if (k <= 5) {
      memo_.emplace(k, kBaseValues[k]);
      work.pop_back();
      continue;
    }
    const auto [a, b] = recurrence_split(k);
    const auto ia = memo_.find(a);
    const auto ib = memo_.find(b);
    if (ia != memo_.end() && ib != memo_.end()) {
      memo_.emplace(k, checked_add(k - 1, checked_add(ia->second, ib->second)));
      work.pop_back();
    } else {
      if (ia == memo_.end()) work.push_back(a);
      if (ib == memo_.end()) work.push_back(b);
    }
  }
  return memo_.at(n);
}

ArcCount SequenceTable::value_alt(std::uint64_t n) {
  if (n == 0)
    throw std::domain_error("sequence index must be positive");
  if (n <= 3) return kBaseValues[n];
  std::lock_guard<std::mutex> lock(mu_);
  const ArcCount a = value_locked(n - 1);
  const ArcCount b = value_locked(n - 2);
  const ArcCount c = value_locked(n - 3);
  // a >= c because the sequence is nondecreasing, so no underflow.
  ArcCount s = checked_add(a, b) - c;
  if (is_three_times_pow2(n) || is_three_times_pow2(n - 1))
    s = checked_add(s, 1);
  return s;
}

std::vector<ArcCount> sequence_values(std::uint64_t n_max) {
  std::vector<ArcCount> v(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max && n <= 5; ++n) v[n] = kBaseValues[n];
  for (std::uint64_t n = 6; n <= n_max; ++n) {
    const auto [a, b] = recurrence_split(n);
    v[n] = checked_add(n - 1, checked_add(v[a], v[b]));
  }
  return v;
}

namespace {

// Directed-rounding evaluation of (mul*n*log2(n) - sub*n) / 2. Every step
// is monotone in the rounding direction, so RNDD/RNDU results bracket the
// true value.
ArcCount bracket_endpoint(std::uint64_t n, unsigned mul, unsigned sub,
                          bool want_ceil, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_uj(t, static_cast<uintmax_t>(n), MPFR_RNDN);  // exact
  mpfr_log2(t, t, rnd);
  mpfr_mul_ui(t, t, static_cast<unsigned long>(mul) * n, rnd);
  mpfr_sub_ui(t, t, static_cast<unsigned long>(sub) * n, rnd);
  mpfr_div_2ui(t, t, 1, rnd);  // exact in binary
  if (want_ceil)
    mpfr_ceil(t, t);
  else
    mpfr_floor(t, t);
  // The integer is tiny next to the 64-bit mantissa of long double, so the
  // conversion is exact.
  const long double v = mpfr_get_ld(t, MPFR_RNDN);
  mpfr_clear(t);
  if (v < 0) return 0;
  return static_cast<ArcCount>(v);
}

// floor (want_ceil = false) or ceil of (mul*n*log2(n) - sub*n) / 2, exact.
// Escalates precision until both bracket endpoints land on the same
// integer. Terminates: the value is irrational unless n is a power of two,
// in which case every step above is exact already.
ArcCount bracketed_integer(std::uint64_t n, unsigned mul, unsigned sub,
                           bool want_ceil) {
  if (n > kMaxBracketArg)
    throw std::out_of_range("bound argument too large for exact evaluation");
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    const ArcCount lo = bracket_endpoint(n, mul, sub, want_ceil, prec, MPFR_RNDD);
    const ArcCount hi = bracket_endpoint(n, mul, sub, want_ceil, prec, MPFR_RNDU);
    if (lo == hi) return lo;
  }
  throw std::logic_error("bound bracketing failed to converge");
}

}  // namespace

ArcCount bound_ks(std::uint64_t n) {
  return checked_mul(n, ceil_log2(n));
}

ArcCount bound_fhpz(std::uint64_t n) {
  if (n < 9) throw std::out_of_range("bound_fhpz: defined for n >= 9");
  // (2*n*log2(n) - 3*n) / 2 == n*log2(n) - 1.5*n
  return bracketed_integer(n, 2, 3, /*want_ceil=*/false);
}

ArcCount bound_klss(std::uint64_t n, std::uint64_t d) {
  if (n == 0)
    throw std::domain_error("bound_klss: argument must be positive");
  if (d < 2) throw std::out_of_range("bound_klss: base must be >= 2");
  const std::uint64_t t = ceil_log_base(n, d);
  return checked_mul(t, n - t);
}

ArcCount half_n_log_lower(std::uint64_t n) {
  if (n < 2) return 0;
  // (n*log2(n) - n) / 2 == (n/2) * log2(n/2)
  return bracketed_integer(n, 1, 1, /*want_ceil=*/true);
}

namespace {

std::string instance_string(std::uint64_t n, std::int64_t i, ArcCount lhs,
                            const char* rel, ArcCount rhs) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "n=%llu i=%lld: %llu %s %llu",
                static_cast<unsigned long long>(n), static_cast<long long>(i),
                static_cast<unsigned long long>(lhs), rel,
                static_cast<unsigned long long>(rhs));
  return buf;
}

}  // namespace

InequalityReport check_sequence_inequalities(std::uint64_t n_max) {
  if (n_max == 0)
    throw std::domain_error("check_sequence_inequalities: n_max must be positive");
  const std::vector<ArcCount> xs = sequence_values(2 * n_max + 2);
  const ArcCount* X = xs.data();

  InequalityReport report;
  report.n_max = n_max;

  // Four-term window: trading the outer pair for the inner pair never
  // gains.
  InequalityCheck window{"window_exchange", 0, std::nullopt};
  for (std::uint64_t n = 4; n <= n_max; ++n) {
    ++window.cases_checked;
    if (X[n] + X[n - 3] < X[n - 1] + X[n - 2]) {
      window.counterexample =
          instance_string(n, 0, X[n] + X[n - 3], "<", X[n - 1] + X[n - 2]);
      break;
    }
  }
  report.checks.push_back(std::move(window));

  // Spreading an even-total pair outward never shrinks the sum.
  InequalityCheck even_spread{"even_sum_spread", 0, std::nullopt};
  for (std::uint64_t n = 3; n <= n_max && !even_spread.counterexample; ++n) {
    for (std::uint64_t i = 0; i + 3 <= n; ++i) {
      ++even_spread.cases_checked;
      if (X[n + i] + X[n - i - 2] < X[n + i - 2] + X[n - i]) {
        even_spread.counterexample =
            instance_string(n, static_cast<std::int64_t>(i),
                            X[n + i] + X[n - i - 2], "<",
                            X[n + i - 2] + X[n - i]);
        break;
      }
    }
  }
  report.checks.push_back(std::move(even_spread));

  // Floor of all even-total pair sums: the tightest (central) pair of the
  // matching parity.
  InequalityCheck even_floor{"even_spread_floor", 0, std::nullopt};
  for (std::uint64_t n = 2; n <= n_max && !even_floor.counterexample; ++n) {
    for (std::int64_t i = -1; i + 3 <= static_cast<std::int64_t>(n); ++i) {
      ++even_floor.cases_checked;
      const ArcCount lhs = X[n + i] + X[n - i - 2];
      const ArcCount rhs = (i % 2 == 0) ? X[n - 2] + X[n] : 2 * X[n - 1];
      if (lhs < rhs) {
        even_floor.counterexample = instance_string(n, i, lhs, "<", rhs);
        break;
      }
    }
  }
  report.checks.push_back(std::move(even_floor));

  // Doubled midpoint versus neighbors, direction set by parity.
  InequalityCheck midpoint{"midpoint_parity", 0, std::nullopt};
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    ++midpoint.cases_checked;
    const ArcCount lhs = 2 * X[n];
    const ArcCount rhs = X[n - 1] + X[n + 1];
    const bool ok = (n % 2 == 0) ? lhs >= rhs : lhs <= rhs;
    if (!ok) {
      midpoint.counterexample =
          instance_string(n, 0, lhs, n % 2 == 0 ? "<" : ">", rhs);
      break;
    }
  }
  report.checks.push_back(std::move(midpoint));

  // Odd-total twin: spreading outward never shrinks the sum...
  InequalityCheck odd_spread{"odd_sum_spread", 0, std::nullopt};
  for (std::uint64_t n = 3; n <= n_max && !odd_spread.counterexample; ++n) {
    for (std::uint64_t i = 0; i + 3 <= n; ++i) {
      ++odd_spread.cases_checked;
      if (X[n - 2 + i] + X[n - 1 - i] > X[n - 1 + i] + X[n - 2 - i]) {
        odd_spread.counterexample =
            instance_string(n, static_cast<std::int64_t>(i),
                            X[n - 2 + i] + X[n - 1 - i], ">",
                            X[n - 1 + i] + X[n - 2 - i]);
        break;
      }
    }
  }
  report.checks.push_back(std::move(odd_spread));

  // ... and the central odd-total pair is the minimum outright.
  InequalityCheck odd_floor{"odd_spread_floor", 0, std::nullopt};
  for (std::uint64_t n = 3; n <= n_max && !odd_floor.counterexample; ++n) {
    for (std::uint64_t i = 0; i + 3 <= n; ++i) {
      ++odd_floor.cases_checked;
      if (X[n - 1] + X[n - 2] > X[n - 1 + i] + X[n - 2 - i]) {
        odd_floor.counterexample =
            instance_string(n, static_cast<std::int64_t>(i),
                            X[n - 1] + X[n - 2], ">",
                            X[n - 1 + i] + X[n - 2 - i]);
        break;
      }
    }
  }
  report.checks.push_back(std::move(odd_floor));

  return report;
}

}  // namespace oclique
