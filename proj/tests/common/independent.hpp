#pragma once

// Second-route checkers used to validate library results. Everything here is
// deliberately naive: direct definitions, no shared code with the library
// algorithms beyond the basic value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symfam/set_family.hpp"
#include "symfam/subset_mask.hpp"

namespace indep {

// Pascal-triangle binomial, safe for n <= 62.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Longest run of the symbol in the doubled characteristic string, capped at n.
inline int longest_cyclic_run(const symfam::SubsetMask& s, char symbol) {
  const int n = s.ground_size();
  std::string chars;
  for (int i = 0; i < n; ++i) chars.push_back(s.test(i) ? '1' : '0');
  const std::string doubled = chars + chars;
  int best = 0;
  int current = 0;
  for (char c : doubled) {
    current = (c == symbol) ? current + 1 : 0;
    best = std::max(best, current);
  }
  return std::min(best, n);
}

// Every pair of distinct members shares an element.
inline bool pairwise_intersecting(const std::vector<symfam::SubsetMask>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!members[i].intersects(members[j])) return false;
    }
  }
  return true;
}

// All k-subsets of [n] as masks, by index combinations.
inline std::vector<symfam::SubsetMask> layer(int n, int k) {
  std::vector<symfam::SubsetMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> positions(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) positions[static_cast<std::size_t>(i)] = i;
  for (;;) {
    symfam::SubsetMask m(n);
    for (int pos : positions) m.set(pos);
    out.push_back(std::move(m));
    int bump = k - 1;
    while (bump >= 0 && positions[static_cast<std::size_t>(bump)] == n - k + bump) --bump;
    if (bump < 0) break;
    ++positions[static_cast<std::size_t>(bump)];
    for (int i = bump + 1; i < k; ++i) {
      positions[static_cast<std::size_t>(i)] = positions[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

// Gaussian binomial by the Pascal-style recurrence
// [a,b]_q = [a-1,b-1]_q + q^b [a-1,b]_q.
inline std::uint64_t gaussian_binomial(int a, int b, int q) {
  if (b < 0 || b > a) return 0;
  std::vector<std::vector<std::uint64_t>> table(
      static_cast<std::size_t>(a) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(a) + 1, 0));
  for (int i = 0; i <= a; ++i) {
    table[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      std::uint64_t qpow = 1;
      for (int e = 0; e < j; ++e) qpow *= static_cast<std::uint64_t>(q);
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          qpow * table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// The classic seven lines on seven points.
inline symfam::SetFamily fano() {
  std::vector<symfam::SubsetMask> lines;
  const std::vector<std::vector<int>> raw{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                          {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  for (const auto& line : raw) lines.push_back(symfam::SubsetMask::from_elements(7, line));
  return symfam::SetFamily(7, 3, std::move(lines));
}

// Difference coverage read off the residues directly.
inline bool covers_differences(const std::vector<int>& residues, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int a : residues) {
    for (int b : residues) {
      seen[static_cast<std::size_t>(((a - b) % n + n) % n)] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/**
 * Largest rotation-invariant intersecting k-family of Z_n by direct search:
 * group the layer into rotation orbits, then depth-first over orbit subsets,
 * testing the union member-by-member at every step. Suffix-sum pruning only;
 * no difference-set shortcuts.
 */
inline std::uint64_t max_rotation_invariant_intersecting(int n, int k) {
  if (k > n || k < 1) return 0;
  std::vector<std::vector<symfam::SubsetMask>> orbits;
  std::vector<char> claimed(static_cast<std::size_t>(1) << n, 0);
  for (const symfam::SubsetMask& m : layer(n, k)) {
    const auto key = static_cast<std::size_t>(m.low_bits());
    if (claimed[key]) continue;
    std::vector<symfam::SubsetMask> orbit;
    for (int t = 0; t < n; ++t) {
      symfam::SubsetMask r = m.rotated(t);
      const auto rkey = static_cast<std::size_t>(r.low_bits());
      if (!claimed[rkey]) {
        claimed[rkey] = 1;
        orbit.push_back(std::move(r));
      }
    }
    orbits.push_back(std::move(orbit));
  }
  // keep only orbits whose own members pairwise intersect
  std::vector<std::vector<symfam::SubsetMask>> internal;
  for (auto& orbit : orbits) {
    if (pairwise_intersecting(orbit)) internal.push_back(std::move(orbit));
  }
  std::vector<std::uint64_t> suffix(internal.size() + 1, 0);
  for (std::size_t i = internal.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1] + internal[i].size();
  }
  std::uint64_t best = 0;
  std::vector<symfam::SubsetMask> chosen;
  const auto compatible = [&chosen](const std::vector<symfam::SubsetMask>& orbit) {
    for (const auto& x : orbit) {
      for (const auto& y : chosen) {
        if (!x.intersects(y)) return false;
      }
    }
    return true;
  };
  const std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    best = std::max(best, static_cast<std::uint64_t>(chosen.size()));
    if (idx == internal.size()) return;
    if (chosen.size() + suffix[idx] <= best) return;
    if (compatible(internal[idx])) {
      const std::size_t before = chosen.size();
      chosen.insert(chosen.end(), internal[idx].begin(), internal[idx].end());
      walk(idx + 1);
      chosen.resize(before);
    }
    walk(idx + 1);
  };
  walk(0);
  return best;
}

// Deterministic generator seeded per test site.
inline std::mt19937_64 rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return std::mt19937_64(seq);
}

// Random k-subset of [n] as a mask.
inline symfam::SubsetMask random_subset(std::mt19937_64& gen, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), gen);
  symfam::SubsetMask m(n);
  for (int i = 0; i < k; ++i) m.set(pool[static_cast<std::size_t>(i)]);
  return m;
}

}  // namespace indep
