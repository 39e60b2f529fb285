#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symfam {

/**
 * Subset of a ground set of n points, stored as a bit vector.
 *
 * Bit positions are 0-based. Named elements of [n] are 1-based at the API
 * boundary (element e lives at position e-1); residue accessors treat
 * positions directly as elements of Z_n. Storage is inline for n <= 128 and
 * heap-backed beyond, up to kMaxGroundSet points.
 *
 * Masks over the same ground set are totally ordered by their value as an
 * integer (position 0 = least significant bit); ground-set size is the
 * leading comparison key so mixed collections still sort deterministically.
 */
class SubsetMask {
 public:
  static constexpr int kMaxGroundSet = 1 << 16;
  static constexpr int kInlineBits = 128;

  SubsetMask() = default;
  explicit SubsetMask(int n);

  [[nodiscard]] static SubsetMask from_elements(int n, std::span<const int> elements_1based);
  [[nodiscard]] static SubsetMask from_residues(int n, std::span<const int> residues_0based);
  [[nodiscard]] static SubsetMask from_bits(int n, std::uint64_t bits);  // n <= 64
  [[nodiscard]] static SubsetMask full(int n);

  [[nodiscard]] int ground_size() const { return n_; }
  [[nodiscard]] int count() const;
  [[nodiscard]] bool empty() const;

  [[nodiscard]] bool test(int pos) const;
  void set(int pos);
  void reset(int pos);
  [[nodiscard]] bool contains_element(int e) const;  // 1-based

  [[nodiscard]] bool intersects(const SubsetMask& other) const;
  [[nodiscard]] bool is_subset_of(const SubsetMask& other) const;
  [[nodiscard]] SubsetMask united(const SubsetMask& other) const;
  [[nodiscard]] SubsetMask intersected(const SubsetMask& other) const;
  [[nodiscard]] SubsetMask complemented() const;

  // Cyclic shift on positions: the result holds (i + shift) mod n for every
  // held position i. Negative shifts allowed.
  [[nodiscard]] SubsetMask rotated(int shift) const;

  [[nodiscard]] std::uint64_t low_bits() const;
  [[nodiscard]] std::span<const std::uint64_t> words() const;
  [[nodiscard]] std::vector<int> elements() const;  // 1-based, ascending
  [[nodiscard]] std::vector<int> residues() const;  // 0-based, ascending
  [[nodiscard]] std::string to_string() const;      // position 0 first

  [[nodiscard]] bool operator==(const SubsetMask& other) const;
  [[nodiscard]] std::strong_ordering operator<=>(const SubsetMask& other) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, 2> small_{0, 0};
  std::vector<std::uint64_t> big_;

  [[nodiscard]] int word_count() const { return (n_ + 63) / 64; }
  [[nodiscard]] std::uint64_t* data();
  [[nodiscard]] const std::uint64_t* data() const;
  void check_same_ground(const SubsetMask& other) const;
};

}  // namespace symfam
