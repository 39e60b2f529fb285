#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "symfam/set_family.hpp"
#include "symfam/subset_mask.hpp"

namespace symfam {

/**
 * One rotation orbit of the k-subsets of Z_n. The representative is the
 * least mask in the orbit under the mask ordering; the orbit size times the
 * number of rotations fixing the representative equals n. The orbit is
 * internally intersecting exactly when the representative meets every one of
 * its rotations, equivalently when its difference set is all of Z_n.
 */
struct NecklaceOrbit {
  int n = 0;
  int k = 0;
  SubsetMask representative;
  int size = 0;
  bool internally_intersecting = false;
};

/**
 * Rotation orbits partitioning the k-subsets of Z_n, ordered by ascending
 * representative. Orbit sizes sum to C(n,k). Enumeration cost is the whole
 * layer; beyond the budget this throws budget_error.
 */
[[nodiscard]] std::vector<NecklaceOrbit> cyclic_orbit_decomposition(int n, int k,
                                                                    long budget = 100'000'000);

/**
 * The largest rotation-invariant intersecting k-uniform family on Z_n.
 *
 * value is exact when exhaustive is true; a budget-stopped search reports the
 * best union found and exhaustive = false. The witness is materialized only
 * when it fits the member cap (it is the whole layer when k > n/2).
 * exact_for_all_symmetric records when the value is the maximum over ALL
 * symmetric families, not just rotation-invariant ones: prime n (every
 * transitive action contains a relabeled n-cycle) or the trivial k > n/2
 * layer. Composite n below the half layer yields a certified lower bound.
 */
struct OracleResult {
  int n = 0;
  int k = 0;
  mpz_class value;
  std::optional<SetFamily> witness;
  bool exact_for_all_symmetric = false;
  bool exhaustive = true;
};

[[nodiscard]] OracleResult s_cyclic(int n, int k, long layer_budget = 100'000'000,
                                    std::uint64_t node_budget = 100'000'000,
                                    long witness_member_cap = 1'000'000);

}  // namespace symfam
