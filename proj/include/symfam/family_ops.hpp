#pragma once

#include <cstdint>

#include "symfam/permutation.hpp"
#include "symfam/set_family.hpp"

namespace symfam {

/**
 * Tensor product on ground sets [n] x [m] flattened to [n*m]: the block of
 * member x tensor member y holds element (i-1)*m + j exactly when x holds i
 * and y holds j. Products of intersecting families are intersecting, and
 * uniformities multiply.
 */
[[nodiscard]] SetFamily tensor_product(const SetFamily& a, const SetFamily& b);

// All n cyclic translates of a subset of Z_n, deduplicated. The result is
// invariant under rotation by construction.
[[nodiscard]] SetFamily translates_family(const SubsetMask& base);

/**
 * All l-point supersets of members of a k-uniform family, k <= l <= n.
 * Enumerates complement combinations per member and deduplicates; refuses
 * with a budget failure when the generated-volume estimate member_count *
 * C(n-k, l-k) exceeds the budget.
 */
[[nodiscard]] SetFamily superset_extension(const SetFamily& family, int l,
                                           std::uint64_t budget = 100'000'000);

// Image family {sigma(x) : x in family}; sigma given as 0-based position
// images of length n.
[[nodiscard]] SetFamily relabeled(const SetFamily& family, std::span<const int> images0);

/**
 * Witness for a tensor product: each generator of either factor acts on its
 * own block coordinate and fixes the other. The product group is transitive
 * whenever both factors are.
 */
[[nodiscard]] GroupWitness tensor_witness(const GroupWitness& left, const GroupWitness& right);

}  // namespace symfam
