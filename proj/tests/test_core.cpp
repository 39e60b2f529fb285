#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "common/independent.hpp"
#include "common/test_seed.hpp"
#include "symfam/errors.hpp"
#include "symfam/family_ops.hpp"
#include "symfam/measure.hpp"
#include "symfam/numeric.hpp"
#include "symfam/set_family.hpp"
#include "symfam/subset_mask.hpp"

using namespace symfam;

namespace {

// Direct summation of the p-biased weight over every superset-closed member.
mpq_class direct_upset_measure(const SetFamily& family, const mpq_class& p) {
  const int n = family.ground_size();
  mpq_class total = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const SubsetMask candidate = SubsetMask::from_bits(n, bits);
    bool in_upset = false;
    for (const SubsetMask& member : family.members()) {
      if (member.is_subset_of(candidate)) {
        in_upset = true;
        break;
      }
    }
    if (!in_upset) continue;
    mpq_class weight = 1;
    for (int i = 0; i < n; ++i) weight *= candidate.test(i) ? p : 1 - p;
    total += weight;
  }
  return total;
}

SetFamily random_uniform_family(std::mt19937_64& gen, int n, int k, int member_count) {
  std::vector<SubsetMask> members;
  for (int i = 0; i < member_count; ++i) members.push_back(indep::random_subset(gen, n, k));
  return SetFamily(n, std::move(members));
}

}  // namespace

TEST_CASE("binomial matches the Pascal triangle and handles out-of-range input") {
  for (int n = 0; n <= 20; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      CHECK(binomial(n, k) == mpz_class(indep::binomial(n, k)));
    }
  }
  CHECK(binomial(43, 7) == mpz_class("32224114"));
  CHECK(binomial(-3, 2) == 0);
}

TEST_CASE("primality and factorization agree with trial division") {
  const auto naive_prime = [](std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t v = 0; v <= 500; ++v) CHECK(is_prime(v) == naive_prime(v));
  CHECK(distinct_prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(distinct_prime_factors(97) == std::vector<std::uint64_t>{97});
}

TEST_CASE("integer_sqrt floors exactly at squares and between them") {
  for (std::uint64_t v = 0; v <= 3000; ++v) {
    const std::uint64_t root = integer_sqrt(v);
    CHECK(root * root <= v);
    CHECK((root + 1) * (root + 1) > v);
  }
}

TEST_CASE("dyadic_round_up never undershoots and is exact on dyadics") {
  CHECK(dyadic_round_up(0.5) == mpq_class(1, 2));
  CHECK(dyadic_round_up(0.25) == mpq_class(1, 4));
  CHECK(dyadic_round_up(0.0) == 0);
  CHECK(dyadic_round_up(1.0) == 1);
  auto gen = indep::rng(test_seed(), 11);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = dist(gen);
    const mpq_class rounded = dyadic_round_up(x);
    CHECK(rounded >= mpq_class(x));
    CHECK(rounded <= 1);
    CHECK(to_double(rounded) <= x + 1e-15);
  }
}

TEST_CASE("probability canonicalizes its fraction") {
  CHECK(probability(2, 4) == mpq_class(1, 2));
  CHECK(probability(0, 7) == 0);
  CHECK_THROWS_AS(static_cast<void>(probability(5, 4)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(probability(1, 0)), std::invalid_argument);
}

TEST_CASE("masks convert between element and residue views") {
  const SubsetMask m = SubsetMask::from_elements(9, std::vector<int>{1, 4, 9});
  CHECK(m.count() == 3);
  CHECK(m.elements() == std::vector<int>{1, 4, 9});
  CHECK(m.residues() == std::vector<int>{0, 3, 8});
  CHECK(m == SubsetMask::from_residues(9, std::vector<int>{0, 3, 8}));
  CHECK(m.contains_element(4));
  CHECK_FALSE(m.contains_element(5));
  CHECK_THROWS_AS(static_cast<void>(SubsetMask::from_elements(9, std::vector<int>{0})), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(SubsetMask::from_elements(9, std::vector<int>{10})), std::invalid_argument);
}

TEST_CASE("rotation composes additively and preserves cardinality") {
  auto gen = indep::rng(test_seed(), 12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 40);
    const int k = static_cast<int>(gen() % (n + 1));
    const SubsetMask m = indep::random_subset(gen, n, k);
    const int a = static_cast<int>(gen() % n);
    const int b = static_cast<int>(gen() % n);
    CHECK(m.rotated(a).rotated(b) == m.rotated(a + b));
    CHECK(m.rotated(a).count() == m.count());
    CHECK(m.rotated(n) == m);
    CHECK(m.rotated(-a).rotated(a) == m);
  }
}

TEST_CASE("complement, union, and intersection behave like set algebra") {
  auto gen = indep::rng(test_seed(), 13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 150);
    const SubsetMask a = indep::random_subset(gen, n, static_cast<int>(gen() % (n + 1)));
    const SubsetMask b = indep::random_subset(gen, n, static_cast<int>(gen() % (n + 1)));
    CHECK(a.complemented().complemented() == a);
    CHECK(a.united(a.complemented()) == SubsetMask::full(n));
    CHECK(a.intersected(b).count() + a.united(b).count() == a.count() + b.count());
    CHECK(a.intersects(b) == (a.intersected(b).count() > 0));
    CHECK(a.intersected(b).is_subset_of(a));
    CHECK(a.is_subset_of(a.united(b)));
  }
}

TEST_CASE("mask ordering sorts by ground size first") {
  CHECK(SubsetMask::from_bits(3, 0b101) < SubsetMask::from_bits(4, 0b1));
  CHECK(SubsetMask::from_bits(5, 0b1) < SubsetMask::from_bits(5, 0b10));
  CHECK(SubsetMask::from_bits(5, 0b11) == SubsetMask::from_elements(5, std::vector<int>{1, 2}));
}

TEST_CASE("families deduplicate and canonically order members") {
  const SubsetMask a = SubsetMask::from_elements(5, std::vector<int>{1, 2});
  const SubsetMask b = SubsetMask::from_elements(5, std::vector<int>{3, 4});
  const SetFamily family(5, std::vector<SubsetMask>{b, a, b});
  CHECK(family.size() == 2);
  CHECK(family.members().front() == a);
  CHECK(family.uniformity() == 2);
  CHECK(family.contains(a));
  CHECK_FALSE(family.contains(SubsetMask::from_elements(5, std::vector<int>{1, 3})));
  const SetFamily mixed(5, std::vector<SubsetMask>{a, SubsetMask::full(5)});
  CHECK_FALSE(mixed.uniformity().has_value());
  CHECK_THROWS_AS(SetFamily(5, 3, std::vector<SubsetMask>{a}), std::invalid_argument);
}

TEST_CASE("is_intersecting matches the pairwise definition") {
  CHECK(is_intersecting(indep::fano()));
  const SetFamily disjoint(4, std::vector<SubsetMask>{
                                  SubsetMask::from_elements(4, std::vector<int>{1, 2}),
                                  SubsetMask::from_elements(4, std::vector<int>{3, 4})});
  CHECK_FALSE(is_intersecting(disjoint));
  CHECK(is_intersecting(SetFamily(4, std::vector<SubsetMask>{})));
  CHECK(is_intersecting(SetFamily(4, std::vector<SubsetMask>{SubsetMask::from_bits(4, 0b11)})));
  auto gen = indep::rng(test_seed(), 14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 10);
    const SetFamily family =
        random_uniform_family(gen, n, 1 + static_cast<int>(gen() % n), 1 + static_cast<int>(gen() % 6));
    std::vector<SubsetMask> raw(family.members().begin(), family.members().end());
    CHECK(is_intersecting(family) == indep::pairwise_intersecting(raw));
  }
}

TEST_CASE("tensor product lands on the block index formula") {
  const SetFamily left(3, std::vector<SubsetMask>{SubsetMask::from_elements(3, std::vector<int>{1, 2})});
  const SetFamily right(2, std::vector<SubsetMask>{SubsetMask::from_elements(2, std::vector<int>{1})});
  const SetFamily product = tensor_product(left, right);
  CHECK(product.ground_size() == 6);
  CHECK(product.size() == 1);
  CHECK(product.members().front() == SubsetMask::from_elements(6, std::vector<int>{1, 3}));
}

TEST_CASE("tensor product multiplies sizes and uniformities") {
  const SetFamily fano = indep::fano();
  const SetFamily product = tensor_product(fano, fano);
  CHECK(product.ground_size() == 49);
  CHECK(product.size() == 49);
  CHECK(product.uniformity() == 9);
  CHECK(is_intersecting(product));

  const SetFamily block(4, std::vector<SubsetMask>{SubsetMask::full(4)});
  const SetFamily expanded = tensor_product(fano, block);
  CHECK(expanded.size() == fano.size());
  CHECK(expanded.uniformity() == 12);
}

TEST_CASE("tensor product of random intersecting families is intersecting") {
  auto gen = indep::rng(test_seed(), 15);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(gen() % 5);
    const int m = 3 + static_cast<int>(gen() % 5);
    // star families through a random point are intersecting by construction
    const int pa = static_cast<int>(gen() % n);
    const int pb = static_cast<int>(gen() % m);
    std::vector<SubsetMask> left_members;
    std::vector<SubsetMask> right_members;
    for (int i = 0; i < 4; ++i) {
      SubsetMask x = indep::random_subset(gen, n, 1 + static_cast<int>(gen() % (n - 1)));
      x.set(pa);
      left_members.push_back(std::move(x));
      SubsetMask y = indep::random_subset(gen, m, 1 + static_cast<int>(gen() % (m - 1)));
      y.set(pb);
      right_members.push_back(std::move(y));
    }
    const SetFamily left(n, std::move(left_members));
    const SetFamily right(m, std::move(right_members));
    REQUIRE(is_intersecting(left));
    REQUIRE(is_intersecting(right));
    CHECK(is_intersecting(tensor_product(left, right)));
  }
}

TEST_CASE("translates_family enumerates distinct shifts") {
  const SetFamily seven = translates_family(SubsetMask::from_residues(7, std::vector<int>{0, 1, 3}));
  CHECK(seven.size() == 7);
  CHECK(seven.uniformity() == 3);
  CHECK(is_intersecting(seven));

  const SetFamily periodic = translates_family(SubsetMask::from_residues(4, std::vector<int>{0, 2}));
  CHECK(periodic.size() == 2);

  const SetFamily whole = translates_family(SubsetMask::full(5));
  CHECK(whole.size() == 1);
}

TEST_CASE("translates_family output is rotation invariant") {
  auto gen = indep::rng(test_seed(), 16);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 16);
    const int k = 1 + static_cast<int>(gen() % n);
    const SetFamily family = translates_family(indep::random_subset(gen, n, k));
    for (const SubsetMask& member : family.members()) {
      CHECK(family.contains(member.rotated(1)));
    }
  }
}

TEST_CASE("superset_extension counts supersets exactly") {
  const SetFamily fano = indep::fano();
  const SetFamily ext4 = superset_extension(fano, 4);
  CHECK(ext4.size() == 28);
  CHECK(ext4.uniformity() == 4);
  CHECK(is_intersecting(ext4));
  const SetFamily same = superset_extension(fano, 3);
  CHECK(same.members() == fano.members());
  const SetFamily whole = superset_extension(fano, 7);
  CHECK(whole.size() == 1);
  CHECK(whole.members().front() == SubsetMask::full(7));
  CHECK_THROWS_AS(static_cast<void>(superset_extension(fano, 2)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(superset_extension(fano, 5, 3)), budget_error);
}

TEST_CASE("superset_extension satisfies the local LYM ratio") {
  auto gen = indep::rng(test_seed(), 17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(gen() % 8);
    const int k = 1 + static_cast<int>(gen() % (n - 2));
    const int l = k + static_cast<int>(gen() % (n - k + 1));
    const SetFamily family = random_uniform_family(gen, n, k, 1 + static_cast<int>(gen() % 5));
    const SetFamily extended = superset_extension(family, l);
    if (binomial(n, l) >= binomial(n, k)) CHECK(extended.size() >= family.size());
    // |ext| / C(n,l) >= |A| / C(n,k), exactly
    const mpq_class lhs(mpz_class(static_cast<unsigned long>(extended.size())), binomial(n, l));
    const mpq_class rhs(mpz_class(static_cast<unsigned long>(family.size())), binomial(n, k));
    mpq_class lhs_c = lhs;
    mpq_class rhs_c = rhs;
    lhs_c.canonicalize();
    rhs_c.canonicalize();
    CHECK(lhs_c >= rhs_c);
  }
}

TEST_CASE("upset measure agrees with direct summation on both routes") {
  auto gen = indep::rng(test_seed(), 18);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 9);
    const int k = 1 + static_cast<int>(gen() % n);
    const SetFamily family = random_uniform_family(gen, n, k, 1 + static_cast<int>(gen() % 4));
    const mpq_class p = probability(1 + static_cast<long>(gen() % 9), 10);
    const mpq_class direct = direct_upset_measure(family, p);
    const BiasedMeasureResult swept = biased_measure_of_upset(family, p);
    CHECK(swept.value == direct);
    CHECK(biased_measure_by_inclusion_exclusion(family, p) == direct);
  }
}

TEST_CASE("upset measure is monotone in p") {
  auto gen = indep::rng(test_seed(), 19);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(gen() % 8);
    const SetFamily family =
        random_uniform_family(gen, n, 1 + static_cast<int>(gen() % n), 1 + static_cast<int>(gen() % 4));
    mpq_class previous = 0;
    for (long numerator = 0; numerator <= 8; ++numerator) {
      const mpq_class current = biased_measure_of_upset(family, probability(numerator, 8)).value;
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("intersecting uniform families below the half layer have small half measure") {
  auto gen = indep::rng(test_seed(), 20);
  int verified = 0;
  for (int trial = 0; trial < 200 && verified < 25; ++trial) {
    const int n = 4 + static_cast<int>(gen() % 11);
    const int k = 1 + static_cast<int>(gen() % (n / 2));
    const SetFamily family = translates_family(indep::random_subset(gen, n, k));
    if (!is_intersecting(family)) continue;
    ++verified;
    CHECK(biased_measure_of_upset(family, mpq_class(1, 2)).value <= mpq_class(1, 2));
  }
  CHECK(verified > 0);
}

TEST_CASE("measure sweep refuses oversized ground sets") {
  const SetFamily big(30, std::vector<SubsetMask>{SubsetMask::from_bits(30, 0b1)});
  CHECK_THROWS_AS(static_cast<void>(biased_measure_of_upset(big, mpq_class(1, 2))), budget_error);
}
