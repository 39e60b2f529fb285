#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "symfam/gf.hpp"
#include "symfam/permutation.hpp"
#include "symfam/set_family.hpp"
#include "symfam/subset_mask.hpp"

namespace symfam {

// q-analogue of the binomial coefficient, exact.
[[nodiscard]] mpz_class gaussian_binomial(int a, int b, int q);

struct PrimePower {
  int p;
  int m;
};

// Decomposes q = p^m; throws std::invalid_argument when q is not a prime power.
[[nodiscard]] PrimePower factor_prime_power(int q);

enum class SpaceKind { projective, affine, dual_affine };

/**
 * A flat, encoded canonically so structural equality is flat equality:
 * the direction is a reduced-echelon row basis, and affine kinds carry an
 * offset vector reduced to zero in the pivot coordinates. Projective flats
 * have an empty offset.
 */
struct Flat {
  std::vector<std::vector<int>> basis;
  std::vector<int> offset;

  friend auto operator<=>(const Flat&, const Flat&) = default;
};

/**
 * Point-label scaffolding for one geometry over GF(q).
 *
 * projective: points of PG(d,q); canonical representative has its last
 *   nonzero coordinate equal to 1.
 * affine: points of AG(d,q), plain coordinate vectors.
 * dual_affine: points are the affine hyperplanes of GF(q)^d, encoded as the
 *   direction (scaled like a projective point) followed by the constant term.
 *
 * Encodings are sorted ascending and numbered 1..n; every family this module
 * emits uses these labels, so encodings are stable across runs.
 */
class IncidenceSpace {
 public:
  IncidenceSpace(SpaceKind kind, int dimension, int q);

  [[nodiscard]] SpaceKind kind() const { return kind_; }
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] int q() const { return field_.order(); }
  [[nodiscard]] const GaloisField& field() const { return field_; }
  [[nodiscard]] int point_count() const { return static_cast<int>(points_.size()); }
  [[nodiscard]] const std::vector<std::vector<int>>& point_encodings() const { return points_; }

  // 1-based label of a canonical encoding; throws std::out_of_range if absent.
  [[nodiscard]] int label_of(const std::vector<int>& encoding) const;

  /**
   * Flats of the given dimension: projective dimension for the projective
   * kind, affine dimension of AG(d,q) flats for the affine and dual_affine
   * kinds (a dual_affine member set is indexed by the AG flat its point set
   * passes through).
   */
  [[nodiscard]] std::vector<Flat> flats(int flat_dim) const;

  /**
   * The point labels a flat selects: its own points for projective and
   * affine kinds; for dual_affine, the labels of the hyperplanes that
   * contain the flat.
   */
  [[nodiscard]] SubsetMask labels_of_flat(const Flat& flat) const;

 private:
  SpaceKind kind_;
  int dimension_;
  GaloisField field_;
  std::vector<std::vector<int>> points_;
};

/**
 * The family of all r-dimensional projective subspaces of PG(2r,q) as point
 * sets. Any two members share a point (their dimensions sum to the space
 * dimension), k = (q^{r+1}-1)/(q-1), and the family size is the Gaussian
 * binomial [2r+1 choose r+1]_q.
 */
[[nodiscard]] SetFamily pg_flat_family(int r, int q);

/**
 * Ground set: the q(q^{2r}-1)/(q-1) affine hyperplanes of GF(q)^{2r}. One
 * member per (r-1)-flat of AG(2r,q): the hyperplanes through it. Members are
 * k-sets with k = (q^{r+1}-1)/(q-1); any two members intersect because two
 * (r-1)-flats always span at most a hyperplane.
 */
[[nodiscard]] SetFamily dual_affine_family(int r, int q);

/**
 * Permutation generators on the space's point labels: for projective spaces
 * a single invertible matrix whose powers sweep every point (companion
 * matrix of a primitive polynomial); for dual affine spaces that matrix
 * together with a unit translation, whose closure reaches every hyperplane.
 * Transitivity and preservation of the space's flat structure are verified
 * before returning; a failure throws std::logic_error.
 */
[[nodiscard]] GroupWitness geometry_symmetry_witness(const IncidenceSpace& space);

/**
 * A perfect difference set of Z_{q^2+q+1}: label the points of PG(2,q) by
 * discrete logarithms of a generator of GF(q^3), and take one line. Every
 * nonzero residue arises exactly once as a difference. Output is the least
 * rotation of the line's label set; perfectness is verified before return.
 */
[[nodiscard]] SubsetMask singer_difference_set(int q);

/**
 * True iff no k-set outside the family meets every member. The family must
 * be uniform and intersecting; enumeration cost is C(n,k).
 */
[[nodiscard]] bool is_maximal_intersecting(const SetFamily& family,
                                           long budget = 100'000'000);

}  // namespace symfam
