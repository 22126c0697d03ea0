#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oclique/types.hpp"

namespace oclique {

// Throwing arithmetic: std::overflow_error instead of silent wraparound.
ArcCount checked_add(ArcCount a, ArcCount b);
ArcCount checked_mul(ArcCount a, ArcCount b);

// Smallest k with 2^k >= n. ceil_log2(1) == 0. Throws std::domain_error on 0.
std::uint64_t ceil_log2(std::uint64_t n);

// Smallest k with d^k >= n, for d >= 2. Integer arithmetic only.
std::uint64_t ceil_log_base(std::uint64_t n, std::uint64_t d);

// True iff n == 3 * 2^i for some i >= 0. Repeated halving, no floats.
bool is_three_times_pow2(std::uint64_t n);

// The two sub-orders the recurrence splits n into, n >= 6. Depends only on
// n mod 4; first component >= second. The same split is the one the
// recursive construction uses.
std::pair<std::uint64_t, std::uint64_t> recurrence_split(std::uint64_t n);

// Memoized evaluator for the recursive arc-count sequence. value(n) follows
// the split recurrence; value_alt(n) follows the equivalent three-term form
//     value(n-1) + value(n-2) - value(n-3)   (+1 exactly when n or n-1 is
// 3 * 2^i), valid for n >= 4. The two routes agree everywhere; tests check
// this en masse.
//
// Queries are safe to issue from multiple threads.
class SequenceTable {
 public:
  ArcCount value(std::uint64_t n);
  ArcCount value_alt(std::uint64_t n);

 private:
  ArcCount value_locked(std::uint64_t n);

  std::mutex mu_;
  std::unordered_map<std::uint64_t, ArcCount> memo_;
};

// Dense table of the sequence: slot i holds value(i) for 1 <= i <= n_max,
// slot 0 is unused and zero. Bottom-up, no memo, O(n_max) time and space.
std::vector<ArcCount> sequence_values(std::uint64_t n_max);

// Classical upper bounds on the minimum arc count, exact integers.
//   bound_ks:   n * ceil(log2 n)                        n >= 1
//   bound_fhpz: floor(n log2 n - 1.5 n)                 n >= 9
//   bound_klss: ceil(log_d n) * (n - ceil(log_d n))     n >= 2, d >= 2
// bound_fhpz evaluates the transcendental expression with directed-rounding
// brackets at escalating precision, so the floor is provably correct.
ArcCount bound_ks(std::uint64_t n);
ArcCount bound_fhpz(std::uint64_t n);
ArcCount bound_klss(std::uint64_t n, std::uint64_t d = 2);

// Exact ceil((n/2) * log2(n/2)) for n >= 2, 0 otherwise. Same bracketing
// machinery as bound_fhpz. This is the analytic part of the search seed.
ArcCount half_n_log_lower(std::uint64_t n);

// One inequality family checked over every admissible index up to n_max.
struct InequalityCheck {
  std::string name;
  std::uint64_t cases_checked = 0;
  std::optional<std::string> counterexample;  // first failing instance
  bool passed() const { return !counterexample.has_value(); }
};

struct InequalityReport {
  std::uint64_t n_max = 0;
  std::vector<InequalityCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

// Exhaustively verifies the exchange/convexity inequalities the recursive
// construction's optimality argument rests on, for all indices <= n_max.
// Two-index families cost O(n_max^2) sequence lookups.
InequalityReport check_sequence_inequalities(std::uint64_t n_max);

}  // namespace oclique
