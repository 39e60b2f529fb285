#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "symfam/set_family.hpp"

namespace symfam {

/**
 * Longest cyclic run of the given symbol ('1' for held positions, '0' for
 * absent ones) in the characteristic string of S read around Z_n. Constant
 * strings have run length n for their symbol and 0 for the other.
 */
[[nodiscard]] int longest_cyclic_run(const SubsetMask& s, char symbol);

/**
 * The k-point subsets of Z_n whose longest cyclic run of ones strictly beats
 * their longest cyclic run of zeros. Closed under rotation and reflection,
 * and intersecting for k <= n/2.
 */
// Exact count without materializing members. Enumeration refuses when
// C(n, k) exceeds the budget. thread_count > 1 splits the colex range.
[[nodiscard]] std::uint64_t count_run_dominant_family(int n, int k,
                                                      std::uint64_t budget = 100'000'000,
                                                      int thread_count = 1);

// Materialized variant of the same family.
[[nodiscard]] SetFamily build_run_dominant_family(int n, int k,
                                                  std::uint64_t budget = 100'000'000);

// True exactly when the family above is nonempty: n <= floor(k^2/4) + k.
// Tight arrangement: one ones-run of length z+1, the other k-z-1 ones split
// the zeros into gaps of length at most z; best z splits k in half.
[[nodiscard]] bool run_family_nonempty(int n, int k);

enum class RunConstraint {
  kZeroRunAtLeast,   // some cyclic zero-run of length >= l
  kNoRunOfLength,    // no cyclic run of either symbol of length >= l
};

struct RunConstrainedCount {
  std::uint64_t exact = 0;
  // kZeroRunAtLeast: n * C(n-l, k), an upper bound for the exact count.
  // kNoRunOfLength: C(n, k) / 2 as a rational; a lower bound for the exact
  // count whenever the threshold holds.
  mpq_class companion_bound;
  double threshold = 0.0;      // kNoRunOfLength only
  bool threshold_met = false;  // kNoRunOfLength only
};

/**
 * Exact count of k-point subsets of Z_n under a cyclic run constraint,
 * paired with the matching closed-form bound. For kNoRunOfLength the
 * threshold (log n + 2 log 2) / (log n - log(n-k)) <= l guarantees
 * exact >= C(n, k) / 2, but only when 2k <= n; each symbol's long runs
 * then cost at most a quarter of the layer. threshold_met reports the
 * conjunction, never the bare formula.
 */
[[nodiscard]] RunConstrainedCount count_run_constrained(int n, int k, int l, RunConstraint mode,
                                                        std::uint64_t budget = 100'000'000);

struct RunLowerBoundChain {
  bool applicable = false;
  int l0 = 0;                  // smallest block length passing the chain condition
  mpq_class bound;             // (n/2) * C(n-l0-2, k-l0), valid when applicable
  double scan_threshold = 0.0; // right side of the condition at l0
  // Asymptotic shape of the same bound with its free constant split out:
  // bound ~ c1 * exponent_factor * C(n, k).
  double exponent_factor = 0.0;
  double exponent_times_binomial = 0.0;
};

/**
 * Constructive lower bound for the run-dominant family size: scan the
 * smallest l0 >= 2 with l0 - 1 >= (log(n-l0-2) + 2 log 2) /
 * (log(n-l0-2) - log(n-k-2)) and l0 < min(k, n/2); when one exists the
 * family has at least (n/2) * C(n-l0-2, k-l0) members.
 */
[[nodiscard]] RunLowerBoundChain run_lower_bound_chain(int n, int k);

}  // namespace symfam
