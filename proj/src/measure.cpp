#include "symfam/measure.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "symfam/errors.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

namespace {

void check_probability(const mpq_class& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("biased measure: p outside [0, 1]");
}

// In-place subset-OR transform over a packed table of 2^n bits: afterwards
// bit m is set iff some initially set bit s satisfies s subset of m.
void upward_close(std::vector<std::uint64_t>& bits, int n) {
  const std::size_t words = bits.size();
  for (int i = 0; i < n; ++i) {
    if (i >= 6) {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t base = 0; base < words; base += 2 * stride) {
        for (std::size_t w = 0; w < stride; ++w) {
          bits[base + stride + w] |= bits[base + w];
        }
      }
    } else {
      const int shift = 1 << i;
      std::uint64_t keep = 0;
      switch (i) {
        case 0: keep = 0x5555555555555555ULL; break;
        case 1: keep = 0x3333333333333333ULL; break;
        case 2: keep = 0x0f0f0f0f0f0f0f0fULL; break;
        case 3: keep = 0x00ff00ff00ff00ffULL; break;
        case 4: keep = 0x0000ffff0000ffffULL; break;
        default: keep = 0x00000000ffffffffULL; break;
      }
      for (auto& w : bits) w |= (w & keep) << shift;
    }
  }
}

}  // namespace

BiasedMeasureResult biased_measure_of_upset(const SetFamily& family, const mpq_class& p,
                                            int ground_cap) {
  check_probability(p);
  const int n = family.ground_size();
  if (n > ground_cap) {
    throw budget_error("biased_measure_of_upset: ground set too large for exact measure");
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint64_t> bits(std::max<std::size_t>(total >> 6, 1), 0);
  for (const auto& m : family.members()) {
    const std::uint64_t v = m.low_bits();
    bits[v >> 6] |= 1ULL << (v & 63);
  }
  upward_close(bits, n);

  std::vector<std::uint64_t> size_counts(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t upset_size = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    if ((bits[v >> 6] >> (v & 63)) & 1) {
      ++size_counts[static_cast<std::size_t>(std::popcount(v))];
      ++upset_size;
    }
  }

  // mu = sum_j count_j a^j (b-a)^(n-j) / b^n for p = a/b in lowest terms.
  const mpz_class a = p.get_num();
  const mpz_class b = p.get_den();
  const mpz_class miss = b - a;
  mpz_class numerator = 0;
  mpz_class a_pow = 1;
  std::vector<mpz_class> miss_pow(static_cast<std::size_t>(n) + 1);
  miss_pow[0] = 1;
  for (int j = 1; j <= n; ++j) miss_pow[static_cast<std::size_t>(j)] = miss_pow[static_cast<std::size_t>(j - 1)] * miss;
  for (int j = 0; j <= n; ++j) {
    if (size_counts[static_cast<std::size_t>(j)] != 0) {
      numerator += mpz_class(size_counts[static_cast<std::size_t>(j)]) * a_pow *
                   miss_pow[static_cast<std::size_t>(n - j)];
    }
    a_pow *= a;
  }
  mpq_class value(numerator, int_pow(b, static_cast<unsigned long>(n)));
  value.canonicalize();
  return {p, value, upset_size};
}

mpq_class biased_measure_by_inclusion_exclusion(const SetFamily& family, const mpq_class& p,
                                                int minimal_cap) {
  check_probability(p);
  const int n = family.ground_size();
  std::vector<SubsetMask> minimal;
  for (const auto& x : family.members()) {
    bool dominated = false;
    for (const auto& y : family.members()) {
      if (!(y == x) && y.is_subset_of(x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(x);
  }
  const int m = static_cast<int>(minimal.size());
  if (m > minimal_cap) {
    throw budget_error("biased_measure_by_inclusion_exclusion: too many minimal members");
  }
  // Signed counts per union size keep the rational arithmetic to one pass.
  std::vector<long> signed_counts(static_cast<std::size_t>(n) + 1, 0);
  if (n <= 64) {
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << m); ++t) {
      std::uint64_t u = 0;
      std::uint64_t rest = t;
      while (rest != 0) {
        u |= minimal[static_cast<std::size_t>(std::countr_zero(rest))].low_bits();
        rest &= rest - 1;
      }
      const int parity = std::popcount(t) & 1;
      signed_counts[static_cast<std::size_t>(std::popcount(u))] += parity ? 1 : -1;
    }
  } else {
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t t = 1; t < limit; ++t) {
      SubsetMask u(n);
      std::uint64_t rest = t;
      while (rest != 0) {
        u = u.united(minimal[static_cast<std::size_t>(std::countr_zero(rest))]);
        rest &= rest - 1;
      }
      const int parity = std::popcount(t) & 1;
      signed_counts[static_cast<std::size_t>(u.count())] += parity ? 1 : -1;
    }
  }
  mpq_class value = 0;
  mpq_class p_pow = 1;
  for (int j = 0; j <= n; ++j) {
    if (signed_counts[static_cast<std::size_t>(j)] != 0) {
      value += mpq_class(signed_counts[static_cast<std::size_t>(j)]) * p_pow;
    }
    p_pow *= p;
  }
  return value;
}

}  // namespace symfam
