#include "symfam/runs.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "symfam/errors.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

namespace {

constexpr double kThresholdSlack = 1e-9;  // absorbs float fuzz at exact boundaries

// Longest cyclic run of set bits in an n-bit word. Each AND with the
// one-step rotation keeps exactly the positions ending a run one longer.
inline int longest_one_run_word(std::uint64_t m, int n, std::uint64_t full) {
  if (m == 0) return 0;
  if (m == full) return n;
  int len = 0;
  std::uint64_t r = m;
  while (r != 0) {
    ++len;
    r &= ((r << 1) | (r >> (n - 1))) & full;
  }
  return len;
}

inline bool run_dominant_word(std::uint64_t m, int n, std::uint64_t full) {
  const int ones = longest_one_run_word(m, n, full);
  const int zeros = longest_one_run_word(~m & full, n, full);
  return ones > zeros;
}

void check_layer_args(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("run family: need n >= 1 and 0 <= k <= n");
  }
}

std::uint64_t checked_layer_size(int n, int k, std::uint64_t budget) {
  const mpz_class layer = binomial(n, k);
  if (layer > mpz_class(budget)) {
    throw budget_error("run family: C(n, k) exceeds enumeration budget; use counting mode or raise the budget");
  }
  return layer.get_ui();
}

// Smallest k-bit mask of colex rank r (combinatorial number system).
std::uint64_t unrank_colex(std::uint64_t r, int k) {
  std::uint64_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= static_cast<unsigned long>(r)) ++c;
    mask |= 1ULL << c;
    r -= binomial(c, i).get_ui();
  }
  return mask;
}

inline std::uint64_t next_combination(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// Walks all k-bit masks over n <= 63 positions in colex rank order
// [first, last) and counts those passing the predicate.
template <typename Pred>
std::uint64_t count_combinations(int n, int k, std::uint64_t first, std::uint64_t last,
                                 Pred&& pred) {
  if (first >= last) return 0;
  const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  std::uint64_t v = (k == 0) ? 0 : unrank_colex(first, k);
  std::uint64_t hits = 0;
  for (std::uint64_t r = first; r < last; ++r) {
    if (pred(v, full)) ++hits;
    if (r + 1 < last) v = next_combination(v);
  }
  return hits;
}

template <typename Pred>
std::uint64_t count_layer(int n, int k, std::uint64_t total, int thread_count, Pred&& pred) {
  if (thread_count <= 1 || total < 1024) {
    return count_combinations(n, k, 0, total, pred);
  }
  const int workers = std::min<int>(thread_count, 64);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(workers);
    pool.emplace_back([&, t, lo, hi] { partial[static_cast<std::size_t>(t)] = count_combinations(n, k, lo, hi, pred); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

}  // namespace

int longest_cyclic_run(const SubsetMask& s, char symbol) {
  if (symbol != '0' && symbol != '1') {
    throw std::invalid_argument("longest_cyclic_run: symbol must be '0' or '1'");
  }
  const int n = s.ground_size();
  const SubsetMask target = (symbol == '1') ? s : s.complemented();
  const int held = target.count();
  if (held == 0) return 0;
  if (held == n) return n;
  int start = 0;
  while (target.test(start)) ++start;
  // Position start is clear, so every run is an interval of the linear scan.
  int best = 0;
  int current = 0;
  for (int step = 1; step <= n; ++step) {
    if (target.test((start + step) % n)) {
      ++current;
      best = std::max(best, current);
    } else {
      current = 0;
    }
  }
  return best;
}

std::uint64_t count_run_dominant_family(int n, int k, std::uint64_t budget, int thread_count) {
  check_layer_args(n, k);
  const std::uint64_t total = checked_layer_size(n, k, budget);
  if (n <= 63) {
    return count_layer(n, k, total, thread_count,
                       [n](std::uint64_t v, std::uint64_t full) { return run_dominant_word(v, n, full); });
  }
  // Wide ground sets fall back to mask enumeration through the public scan.
  std::uint64_t hits = 0;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (std::uint64_t r = 0; r < total; ++r) {
    SubsetMask m = SubsetMask::from_residues(n, idx);
    if (longest_cyclic_run(m, '1') > longest_cyclic_run(m, '0')) ++hits;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return hits;
}

SetFamily build_run_dominant_family(int n, int k, std::uint64_t budget) {
  check_layer_args(n, k);
  const std::uint64_t total = checked_layer_size(n, k, budget);
  std::vector<SubsetMask> members;
  if (n <= 63) {
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::uint64_t v = (k == 0) ? 0 : ((1ULL << k) - 1);
    for (std::uint64_t r = 0; r < total; ++r) {
      if (run_dominant_word(v, n, full)) members.push_back(SubsetMask::from_bits(n, v));
      if (r + 1 < total) v = next_combination(v);
    }
  } else {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t r = 0; r < total; ++r) {
      SubsetMask m = SubsetMask::from_residues(n, idx);
      if (longest_cyclic_run(m, '1') > longest_cyclic_run(m, '0')) members.push_back(std::move(m));
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {n, k, std::move(members)};
}

bool run_family_nonempty(int n, int k) {
  check_layer_args(n, k);
  // floor(k^2/4) = floor(k/2) * ceil(k/2).
  const long spread = static_cast<long>(k / 2) * ((k + 1) / 2);
  return n <= spread + k;
}

RunConstrainedCount count_run_constrained(int n, int k, int l, RunConstraint mode,
                                          std::uint64_t budget) {
  check_layer_args(n, k);
  if (l < 1 || l > n) throw std::invalid_argument("count_run_constrained: need 1 <= l <= n");
  const std::uint64_t total = checked_layer_size(n, k, budget);
  if (n > 63) throw budget_error("count_run_constrained: ground set wider than one word");

  RunConstrainedCount out;
  if (mode == RunConstraint::kZeroRunAtLeast) {
    out.exact = count_layer(n, k, total, 1, [n, l](std::uint64_t v, std::uint64_t full) {
      return longest_one_run_word(~v & full, n, full) >= l;
    });
    out.companion_bound = mpq_class(mpz_class(n) * binomial(n - l, k));
    return out;
  }
  out.exact = count_layer(n, k, total, 1, [n, l](std::uint64_t v, std::uint64_t full) {
    return longest_one_run_word(v, n, full) < l && longest_one_run_word(~v & full, n, full) < l;
  });
  out.companion_bound = mpq_class(binomial(n, k)) / 2;
  if (k >= 1 && k < n) {
    out.threshold = (std::log(n) + 2 * std::log(2.0)) / (std::log(n) - std::log(n - k));
  } else {
    out.threshold = std::numeric_limits<double>::infinity();
  }
  out.threshold_met =
      std::isfinite(out.threshold) && 2 * k <= n && (l + kThresholdSlack >= out.threshold);
  return out;
}

RunLowerBoundChain run_lower_bound_chain(int n, int k) {
  if (n < 1 || k < 1 || 2 * k > n) {
    throw std::invalid_argument("run_lower_bound_chain: need 1 <= k <= n/2");
  }
  RunLowerBoundChain out;
  out.exponent_factor =
      std::exp(-((std::log(n - k) - std::log(k)) / (std::log(n) - std::log(n - k))) * std::log(n));
  out.exponent_times_binomial = out.exponent_factor * to_double(binomial(n, k));
  if (n - k - 2 < 1) return out;
  for (int l0 = 2; l0 < k && n - l0 - 2 >= 1 && 2 * l0 < n; ++l0) {
    const double np = n - l0 - 2;
    const double rhs = (std::log(np) + 2 * std::log(2.0)) / (std::log(np) - std::log(n - k - 2));
    if (l0 - 1 + kThresholdSlack >= rhs) {
      out.applicable = true;
      out.l0 = l0;
      out.scan_threshold = rhs;
      mpq_class half_n(n, 2);
      half_n.canonicalize();
      out.bound = half_n * mpq_class(binomial(n - l0 - 2, k - l0));
      break;
    }
  }
  return out;
}

}  // namespace symfam
