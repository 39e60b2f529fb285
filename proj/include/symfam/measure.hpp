#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "symfam/set_family.hpp"

namespace symfam {

// Exact p-biased measure of an upward closure.
struct BiasedMeasureResult {
  mpq_class p;
  mpq_class value;                    // mu_p of the upward closure, in [0, 1]
  std::uint64_t upset_size = 0;       // number of sets in the closure
};

/**
 * mu_p of the upward closure of the family, computed exactly by sweeping all
 * 2^n subsets (membership via a subset-sum transform). The ground set is
 * capped because the sweep table holds one bit per subset.
 */
[[nodiscard]] BiasedMeasureResult biased_measure_of_upset(const SetFamily& family,
                                                          const mpq_class& p,
                                                          int ground_cap = 24);

/**
 * Same value by inclusion-exclusion over the minimal members: for each
 * nonempty subfamily the closed term is p^|union|, signed by parity. Cost is
 * 2^(number of minimal members), capped separately from the sweep.
 */
[[nodiscard]] mpq_class biased_measure_by_inclusion_exclusion(const SetFamily& family,
                                                              const mpq_class& p,
                                                              int minimal_cap = 22);

}  // namespace symfam
