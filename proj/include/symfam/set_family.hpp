#pragma once

#include <optional>
#include <vector>

#include "symfam/subset_mask.hpp"

namespace symfam {

/**
 * Finite family of subsets of [n].
 *
 * Members are deduplicated and kept in ascending bit-vector value order, so
 * families built from the same sets in any order compare equal and serialize
 * to identical bytes. The uniformity witness k is present when every member
 * has exactly k points; constructing with an explicit k enforces it.
 */
class SetFamily {
 public:
  // Infers the uniformity witness when all members share one size.
  SetFamily(int n, std::vector<SubsetMask> members);
  SetFamily(int n, int k, std::vector<SubsetMask> members);

  [[nodiscard]] int ground_size() const { return n_; }
  [[nodiscard]] std::optional<int> uniformity() const { return k_; }
  [[nodiscard]] const std::vector<SubsetMask>& members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool contains(const SubsetMask& m) const;

  [[nodiscard]] bool operator==(const SetFamily& other) const;

 private:
  int n_;
  std::optional<int> k_;
  std::vector<SubsetMask> members_;

  void canonicalize();
};

// Every pair of distinct members meets; empty and singleton families pass.
[[nodiscard]] bool is_intersecting(const SetFamily& family);

}  // namespace symfam
