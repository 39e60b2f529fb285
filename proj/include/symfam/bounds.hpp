#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symfam/set_family.hpp"

namespace symfam {

/**
 * One evaluated bound: the headline value plus every intermediate worth
 * auditing. Free constants are caller-supplied and echoed verbatim; nothing
 * here has a hidden default. exact_value is set when the quantity is a
 * rational computed without rounding.
 */
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  std::map<std::string, double> free_constants;
  double value = 0.0;
  std::optional<mpq_class> exact_value;
  std::vector<std::pair<std::string, double>> components;
  std::vector<std::pair<std::string, mpq_class>> exact_components;
};

/**
 * exp(-c (n-2k) ln n / (k (ln n - ln k))) * C(n,k), the upper-bound shape for
 * the largest symmetric intersecting k-family. At k = n/2 the factor is
 * exactly 1 and the exact binomial is reported. Components carry the factor
 * and the exponent separately.
 */
[[nodiscard]] BoundReport thm_main_bound(long n, long k, double c);

// k/n + sqrt(2 n ln(1/phi))/n, the biased-measure shift that makes a
// k-uniform family's upset measurable; phi in (0,1).
[[nodiscard]] double friedgut_p(long n, long k, double phi);

// min{1, p + c0 p ln(1/p) ln(1/eps) / ln n}: the sharp-threshold bias at
// which a monotone family's measure passes 1 - eps.
[[nodiscard]] double fk_threshold_q(double p, double eps, double c0, long n);

/**
 * Exact check of the biased-measure lower bound: with p = friedgut_p(n,k,phi)
 * rounded UP to a 64-bit dyadic rational (rounding up can only increase the
 * measure of an upset), verifies mu_p(F-upset) > (1-phi) |F| / C(n,k).
 */
struct Lemma22Check {
  bool applicable = false;  // false when the real p exceeds 1
  bool holds = false;
  mpq_class p;
  mpq_class measure;
  mpq_class threshold;
};
[[nodiscard]] Lemma22Check verify_lemma22(const SetFamily& family, const mpq_class& phi);

/**
 * n / ((n-2k) ln n), the quantity whose divergence separates the
 * exponential-decay regime from the polynomial one; +infinity at k = n/2.
 * Components carry exp(-delta (n-2k) ln n / n) * C(n,k) for the caller's
 * delta and the reference constant sqrt(2 + 4/(3 pi)).
 */
[[nodiscard]] BoundReport regime_ratio(long n, long k, double delta);

// sqrt(2 + 4/(3 pi)), the classical perfect-difference-cover density limit.
[[nodiscard]] double redei_renyi_constant();

/**
 * Numeric walk through the chain behind the main upper bound, for a
 * hypothetical family occupying fraction delta of the k-layer: the shifted
 * bias p (phi = 1/2), the sharp-threshold bias q at eps = delta/2, the
 * left side of the contradiction inequality p + c0 p ln(1/p) ln(2/delta) /
 * ln n > 1/2, and the rearranged ceiling 2 exp(-(1-2p) ln n / (2 c0 p
 * ln(1/p))) on delta, which is the headline value. Free constant c0 is the
 * caller's.
 */
[[nodiscard]] BoundReport thm_main_trace(long n, long k, double c0, double delta);

/**
 * Bonferroni undercounts for the k-sets of [q^2+q+1] containing a line of
 * PG(2,q): the two-term bound D C(n-q-1,k-q-1) - C(D,2) C(n-2q-1,k-2q-1)
 * (headline, exact integer) and the half-first-term form (exact component
 * "half-first-term", possibly a half-integer).
 */
[[nodiscard]] BoundReport line_superset_bound(int q, long k);

}  // namespace symfam
