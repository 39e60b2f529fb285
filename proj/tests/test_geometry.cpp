#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "common/independent.hpp"
#include "common/test_seed.hpp"
#include "symfam/bounds.hpp"
#include "symfam/errors.hpp"
#include "symfam/geometry.hpp"
#include "symfam/gf.hpp"
#include "symfam/numeric.hpp"
#include "symfam/permutation.hpp"
#include "symfam/set_family.hpp"

using namespace symfam;

namespace {

long power_long(int base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Counts how often each nonzero residue occurs as a difference of two
// distinct residues of the mask.
std::vector<int> difference_counts(const SubsetMask& s) {
  const int n = s.ground_size();
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  const std::vector<int> residues = s.residues();
  for (int a : residues) {
    for (int b : residues) {
      if (a != b) ++counts[static_cast<std::size_t>(((a - b) % n + n) % n)];
    }
  }
  return counts;
}

std::uint64_t count_supersets_of_any(const SetFamily& family, int k) {
  std::uint64_t hits = 0;
  for (const SubsetMask& candidate : indep::layer(family.ground_size(), k)) {
    for (const SubsetMask& member : family.members()) {
      if (member.is_subset_of(candidate)) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

}  // namespace

TEST_CASE("field arithmetic satisfies the field axioms on every element") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const GaloisField f(p, m);
    const int q = f.order();
    CHECK(q == power_long(p, m));
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field construction is deterministic with pinned moduli and generators") {
  const GaloisField f4(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  CHECK(f4.generator() == 2);
  const GaloisField f8(2, 3);
  CHECK(f8.modulus() == std::vector<int>{1, 1, 0, 1});
  const GaloisField f9(3, 2);
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
  CHECK(f9.generator() == 4);
  CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(6, 1), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse over the multiplicative group") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const GaloisField f(p, m);
    const int q = f.order();
    CHECK(f.exp(0) == 1);
    CHECK(f.exp(q - 1) == 1);
    for (int a = 1; a < q; ++a) CHECK(f.exp(f.log(a)) == a);
    for (int e = 0; e < q - 1; ++e) CHECK(f.log(f.exp(e)) == e);
    CHECK(f.exp(-1) == f.inv(f.generator()));
    for (int a = 0; a < q; ++a) {
      CHECK(f.pow(a, 3) == f.mul(a, f.mul(a, a)));
      if (a != 0) CHECK(f.pow(a, q - 1) == 1);
    }
  }
}

TEST_CASE("polynomial irreducibility and primitivity over small fields") {
  const GaloisField f2(2, 1);
  CHECK(gfpoly::is_irreducible(f2, gfpoly::Poly{1, 1, 1}));
  CHECK_FALSE(gfpoly::is_irreducible(f2, gfpoly::Poly{1, 0, 1}));
  CHECK(gfpoly::first_primitive_polynomial(f2, 2) == gfpoly::Poly{1, 1, 1});
  CHECK(gfpoly::first_primitive_polynomial(f2, 3) == gfpoly::Poly{1, 1, 0, 1});

  // primitivity of the returned polynomial: x must attain full order
  const GaloisField f4(2, 2);
  const gfpoly::Poly prim = gfpoly::first_primitive_polynomial(f4, 2);
  CHECK(prim.size() == 3);
  CHECK(prim.back() == 1);
  CHECK(gfpoly::is_irreducible(f4, prim));
  const int group_order = 15;
  CHECK(gfpoly::x_power_mod(f4, group_order, prim) == gfpoly::Poly{1});
  for (int divisor : {3, 5}) {
    CHECK(gfpoly::x_power_mod(f4, divisor, prim) != gfpoly::Poly{1});
  }
}

TEST_CASE("gaussian binomials satisfy the q-Pascal recurrence and symmetry") {
  for (int q : {2, 3, 4}) {
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; b <= a; ++b) {
        CHECK(gaussian_binomial(a, b, q) == mpz_class(indep::gaussian_binomial(a, b, q)));
        CHECK(gaussian_binomial(a, b, q) == gaussian_binomial(a, a - b, q));
      }
    }
  }
  CHECK_THROWS_AS(static_cast<void>(gaussian_binomial(4, -1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(gaussian_binomial(4, 5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(gaussian_binomial(4, 2, 1)), std::invalid_argument);
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
}

TEST_CASE("factor_prime_power accepts exactly the prime powers") {
  const PrimePower eight = factor_prime_power(8);
  CHECK(eight.p == 2);
  CHECK(eight.m == 3);
  const PrimePower nine = factor_prime_power(9);
  CHECK(nine.p == 3);
  CHECK(nine.m == 2);
  const PrimePower seven = factor_prime_power(7);
  CHECK(seven.p == 7);
  CHECK(seven.m == 1);
  for (int bad : {0, 1, 6, 10, 12, 100}) {
    CHECK_THROWS_AS(static_cast<void>(factor_prime_power(bad)), std::invalid_argument);
  }
}

TEST_CASE("incidence spaces expose stable 1-based point labels") {
  const IncidenceSpace plane(SpaceKind::projective, 2, 3);
  CHECK(plane.point_count() == 13);
  const auto& encodings = plane.point_encodings();
  CHECK(std::is_sorted(encodings.begin(), encodings.end()));
  for (int i = 0; i < plane.point_count(); ++i) {
    CHECK(plane.label_of(encodings[static_cast<std::size_t>(i)]) == i + 1);
  }
  CHECK_THROWS_AS(static_cast<void>(plane.label_of(std::vector<int>{0, 0, 0})), std::out_of_range);

  CHECK(IncidenceSpace(SpaceKind::affine, 2, 3).point_count() == 9);
  CHECK(IncidenceSpace(SpaceKind::dual_affine, 2, 2).point_count() == 6);
  CHECK(IncidenceSpace(SpaceKind::dual_affine, 2, 3).point_count() == 12);
}

TEST_CASE("projective planes have the right flat counts and line sizes") {
  for (int q : {2, 3}) {
    const IncidenceSpace plane(SpaceKind::projective, 2, q);
    const auto lines = plane.flats(1);
    CHECK(static_cast<long>(lines.size()) == static_cast<long>(q) * q + q + 1);
    std::set<SubsetMask> distinct;
    for (const Flat& line : lines) {
      const SubsetMask labels = plane.labels_of_flat(line);
      CHECK(labels.count() == q + 1);
      distinct.insert(labels);
    }
    CHECK(distinct.size() == lines.size());
    CHECK(plane.flats(0).size() == static_cast<std::size_t>(plane.point_count()));
  }
}

TEST_CASE("the r-flat family of PG(2r,q) at r=1, q=2 is the classic 7-line plane") {
  CHECK(pg_flat_family(1, 2) == indep::fano());
}

TEST_CASE("projective flat families match their closed-form sizes") {
  for (int q : {2, 3, 4, 5}) {
    const SetFamily family = pg_flat_family(1, q);
    CHECK(family.ground_size() == q * q + q + 1);
    CHECK(family.size() == static_cast<std::uint64_t>(q) * q + q + 1);
    CHECK(family.uniformity() == std::optional<int>{q + 1});
    CHECK(is_intersecting(family));
  }
  const SetFamily planes = pg_flat_family(2, 2);
  CHECK(planes.ground_size() == 31);
  CHECK(planes.size() == 155);
  CHECK(planes.size() == indep::gaussian_binomial(5, 3, 2));
  CHECK(planes.uniformity() == std::optional<int>{7});
  CHECK(is_intersecting(planes));
}

TEST_CASE("dual affine families match their closed-form sizes") {
  for (int q : {2, 3}) {
    const SetFamily family = dual_affine_family(1, q);
    CHECK(family.ground_size() == q * (q + 1));
    CHECK(family.size() == static_cast<std::uint64_t>(q) * q);
    CHECK(family.uniformity() == std::optional<int>{q + 1});
    CHECK(is_intersecting(family));
  }
  const SetFamily wide = dual_affine_family(2, 2);
  CHECK(wide.ground_size() == 30);
  CHECK(wide.size() == 8 * indep::gaussian_binomial(4, 1, 2));
  CHECK(wide.size() == 120);
  CHECK(wide.uniformity() == std::optional<int>{7});
  CHECK(is_intersecting(wide));
}

TEST_CASE("geometry witnesses verify against the emitted families") {
  const GroupWitness fano_witness = geometry_symmetry_witness(IncidenceSpace(SpaceKind::projective, 2, 2));
  CHECK(verify_symmetric_witness(pg_flat_family(1, 2), fano_witness));

  const GroupWitness plane3 = geometry_symmetry_witness(IncidenceSpace(SpaceKind::projective, 2, 3));
  CHECK(verify_symmetric_witness(pg_flat_family(1, 3), plane3));

  const GroupWitness big = geometry_symmetry_witness(IncidenceSpace(SpaceKind::projective, 4, 2));
  CHECK(verify_symmetric_witness(pg_flat_family(2, 2), big));

  const GroupWitness dual2 = geometry_symmetry_witness(IncidenceSpace(SpaceKind::dual_affine, 2, 2));
  CHECK(verify_symmetric_witness(dual_affine_family(1, 2), dual2));

  const GroupWitness dual3 = geometry_symmetry_witness(IncidenceSpace(SpaceKind::dual_affine, 2, 3));
  CHECK(verify_symmetric_witness(dual_affine_family(1, 3), dual3));

  const GroupWitness dual4 = geometry_symmetry_witness(IncidenceSpace(SpaceKind::dual_affine, 4, 2));
  CHECK(verify_symmetric_witness(dual_affine_family(2, 2), dual4));

  CHECK_THROWS_AS(static_cast<void>(geometry_symmetry_witness(IncidenceSpace(SpaceKind::affine, 2, 2))),
                  std::invalid_argument);
}

TEST_CASE("singer difference sets are perfect and pinned for the smallest fields") {
  CHECK(singer_difference_set(2) == SubsetMask::from_residues(7, std::vector<int>{0, 1, 3}));
  CHECK(singer_difference_set(3) == SubsetMask::from_residues(13, std::vector<int>{0, 1, 3, 9}));
  for (int q : {2, 3, 4, 5}) {
    const SubsetMask s = singer_difference_set(q);
    const int n = q * q + q + 1;
    CHECK(s.ground_size() == n);
    CHECK(s.count() == q + 1);
    const std::vector<int> counts = difference_counts(s);
    for (int r = 1; r < n; ++r) CHECK(counts[static_cast<std::size_t>(r)] == 1);

    // canonical form: no rotation gives a lexicographically smaller residue list
    const std::vector<int> base = s.residues();
    for (int t = 1; t < n; ++t) {
      std::vector<int> rotated;
      for (int x : base) rotated.push_back((x + t) % n);
      std::sort(rotated.begin(), rotated.end());
      CHECK(base <= rotated);
    }
  }
}

TEST_CASE("maximality sweep confirms the plane families and rejects pruned ones") {
  const SetFamily fano = indep::fano();
  CHECK(is_maximal_intersecting(fano));
  CHECK(is_maximal_intersecting(pg_flat_family(1, 3)));

  std::vector<SubsetMask> pruned(fano.members().begin(), fano.members().end() - 1);
  CHECK_FALSE(is_maximal_intersecting(SetFamily(7, 3, std::move(pruned))));

  const SetFamily lone(7, 3, std::vector<SubsetMask>{
                              SubsetMask::from_elements(7, std::vector<int>{1, 2, 3})});
  CHECK_FALSE(is_maximal_intersecting(lone));

  CHECK_THROWS_AS(static_cast<void>(is_maximal_intersecting(fano, 10)), budget_error);
  const SetFamily mixed(7, std::vector<SubsetMask>{
                             SubsetMask::from_elements(7, std::vector<int>{1, 2}),
                             SubsetMask::from_elements(7, std::vector<int>{1, 2, 3})});
  CHECK_THROWS_AS(static_cast<void>(is_maximal_intersecting(mixed)), std::invalid_argument);
}

TEST_CASE("the two-term undercount brackets the true line-superset count") {
  for (int q : {2, 3}) {
    const SetFamily lines = pg_flat_family(1, q);
    const int n = lines.ground_size();
    for (int k = q + 1; k <= n; ++k) {
      const BoundReport report = line_superset_bound(q, k);
      const std::uint64_t exact = count_supersets_of_any(lines, k);
      CHECK(report.exact_value <= mpq_class(mpz_class(static_cast<unsigned long>(exact))));
      const mpq_class first_term(mpz_class(n) * binomial(n - q - 1, k - q - 1));
      CHECK(mpq_class(mpz_class(static_cast<unsigned long>(exact))) <= first_term);
      REQUIRE(report.exact_components.size() == 1);
      CHECK(report.exact_components.front().first == "half-first-term");
      CHECK(report.exact_components.front().second == first_term / 2);
    }
  }
  CHECK(line_superset_bound(2, 3).exact_value == 7);
  CHECK(line_superset_bound(2, 4).exact_value == 28);
  CHECK_THROWS_AS(static_cast<void>(line_superset_bound(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(line_superset_bound(6, 7)), std::invalid_argument);
}
