#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "symfam/set_family.hpp"
#include "symfam/subset_mask.hpp"

namespace symfam {

/**
 * Permutation of n points. Internally an image table on 0-based positions;
 * serialized form is the 1-based image sequence.
 */
class Permutation {
 public:
  explicit Permutation(std::vector<int> images0);
  [[nodiscard]] static Permutation identity(int n);
  [[nodiscard]] static Permutation rotation(int n, int shift);
  [[nodiscard]] static Permutation from_images1(const std::vector<int>& images1);

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int image(int pos0) const { return images_[static_cast<std::size_t>(pos0)]; }
  [[nodiscard]] const std::vector<int>& images0() const { return images_; }
  [[nodiscard]] std::vector<int> images1() const;

  // (this o other): other first, then this.
  [[nodiscard]] Permutation compose(const Permutation& other) const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] SubsetMask apply(const SubsetMask& m) const;
  [[nodiscard]] SetFamily apply(const SetFamily& family) const;

  [[nodiscard]] bool operator==(const Permutation& other) const = default;
  [[nodiscard]] auto operator<=>(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

// Claimed symmetry generators for a family over [n].
struct GroupWitness {
  int n = 0;
  std::vector<Permutation> generators;
};

// Generators each map the family onto itself setwise, and the orbit of
// point 1 under the generated group reaches every point.
[[nodiscard]] bool verify_symmetric_witness(const SetFamily& family, const GroupWitness& witness);

// Orbit of a 0-based point under the generators, as a mask.
[[nodiscard]] SubsetMask orbit_of(const GroupWitness& witness, int pos0);

// Full closure of the generated group; throws budget_error past element_cap.
[[nodiscard]] std::vector<Permutation> generated_group(const GroupWitness& witness,
                                                       std::uint64_t element_cap = 1'000'000);

/**
 * Decides whether the automorphism group of the family is transitive, by
 * searching for one automorphism sending point 1 to each other point.
 * Exact but exponential in the worst case; refuses n above the cap.
 */
[[nodiscard]] bool automorphism_transitivity_search(const SetFamily& family, int ground_cap = 12);

// The automorphism found for 1 -> target (1-based), lexicographically least
// by image sequence, or nullopt when none exists.
[[nodiscard]] std::optional<Permutation> find_automorphism_sending_one(const SetFamily& family,
                                                                       int target_1based,
                                                                       int ground_cap = 12);

/**
 * Exact average of |x intersect sigma(x)| over the whole generated group.
 * Requires the witness group to be transitive on the ground set; for any
 * such group the value is |x|^2 / n.
 */
[[nodiscard]] mpq_class average_intersection_identity(const SubsetMask& x,
                                                      const GroupWitness& witness,
                                                      std::uint64_t element_cap = 1'000'000);

}  // namespace symfam
