#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace symfam {

// S - S = Z_n for a set of residues S.
[[nodiscard]] bool is_difference_cover(const std::vector<int>& residues, int n);

struct CoverSearchResult {
  int n = 0;
  int size = 0;                // size of the witness cover
  std::vector<int> witness;    // residues, ascending; 0 always present
  bool exhaustive = false;     // witness size proven minimal within budget
  std::uint64_t nodes = 0;
};

/**
 * Minimum difference cover of Z_n by branch and bound: strata of increasing
 * size starting at the counting bound ceil((1+sqrt(4n-3))/2), elements added
 * in ascending order with 0 fixed and the second element capped at floor(n/2)
 * (every cover has a translate whose first gap is at most n/size). A stratum
 * branch dies when the covered count plus the best possible gain of the
 * remaining slots cannot reach n. The first cover found in the minimal
 * stratum is the lexicographically least one there. On budget exhaustion the
 * result degrades to a greedy cover with the exhaustive flag cleared.
 */
[[nodiscard]] CoverSearchResult min_difference_cover(int n, std::uint64_t budget = 1'000'000'000);

// All ordered nonzero differences of S are pairwise distinct in Z_n.
[[nodiscard]] bool is_sidon_set(const std::vector<int>& residues, int n);

struct SidonSearchResult {
  int n = 0;
  int size = 0;
  std::vector<int> witness;  // residues, ascending
  bool exhaustive = false;
  std::uint64_t nodes = 0;
};

// Maximum Sidon subset of Z_n, lexicographically least witness. The counting
// bound k(k-1) <= n-1 caps the search depth.
[[nodiscard]] SidonSearchResult max_sidon_set(int n, std::uint64_t budget = 1'000'000'000);

struct GBoundsReport {
  int n = 0;
  int lower = 0;
  std::string lower_provenance;
  int upper = 0;
  std::string upper_provenance;
  bool exact = false;
  // Every certified upper-bound candidate considered, with its provenance.
  std::vector<std::pair<std::string, int>> upper_candidates;
};

/**
 * Bounds on the least k admitting a nonempty symmetric intersecting k-uniform
 * family on [n]. Lower: floor(sqrt(n)) + 1 from the averaging argument, or
 * the exact cover minimum when n is prime and the search closed. Uppers:
 * run-dominant nonemptiness, minimum difference cover found, flat families
 * of projective and dual affine spaces, and products over factorizations.
 */
[[nodiscard]] GBoundsReport g_bounds(int n, std::uint64_t cover_budget = 1'000'000'000);

}  // namespace symfam
