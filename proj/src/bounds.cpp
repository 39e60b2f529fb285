#include "symfam/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "symfam/errors.hpp"
#include "symfam/geometry.hpp"
#include "symfam/measure.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

BoundReport thm_main_bound(long n, long k, double c) {
  if (k < 2 || 2 * k > n) throw std::invalid_argument("need 2 <= k <= n/2");
  if (!(c > 0)) throw std::invalid_argument("constant must be positive");
  BoundReport report;
  report.name = "symmetric-intersecting-upper-bound";
  report.inputs = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}};
  report.free_constants = {{"c", c}};
  const mpz_class layer = binomial(n, k);
  report.exact_components.emplace_back("binomial", mpq_class(layer));
  if (2 * k == n) {
    report.components.emplace_back("exponent", 0.0);
    report.components.emplace_back("factor", 1.0);
    report.value = to_double(layer);
    report.exact_value = mpq_class(layer);
    return report;
  }
  const double log_n = std::log(static_cast<double>(n));
  const double log_k = std::log(static_cast<double>(k));
  const double exponent =
      c * static_cast<double>(n - 2 * k) * log_n / (static_cast<double>(k) * (log_n - log_k));
  const double factor = std::exp(-exponent);
  report.components.emplace_back("exponent", exponent);
  report.components.emplace_back("factor", factor);
  report.value = factor * to_double(layer);
  return report;
}

double friedgut_p(long n, long k, double phi) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("layer parameters out of range");
  if (!(phi > 0.0) || !(phi < 1.0)) throw std::invalid_argument("phi must lie in (0,1)");
  const double nn = static_cast<double>(n);
  return static_cast<double>(k) / nn + std::sqrt(2.0 * nn * std::log(1.0 / phi)) / nn;
}

double fk_threshold_q(double p, double eps, double c0, long n) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must lie in (0,1]");
  if (c0 < 0.0) throw std::invalid_argument("constant must be nonnegative");
  if (n < 2) throw std::invalid_argument("ground set too small for a threshold");
  const double shift = c0 * p * std::log(1.0 / p) * std::log(1.0 / eps) / std::log(static_cast<double>(n));
  return std::min(1.0, p + shift);
}

Lemma22Check verify_lemma22(const SetFamily& family, const mpq_class& phi) {
  if (!family.uniformity().has_value()) throw std::invalid_argument("family must be uniform");
  if (phi <= 0 || phi >= 1) throw std::invalid_argument("phi must lie in (0,1)");
  const long n = family.ground_size();
  const long k = *family.uniformity();

  Lemma22Check result;
  const double p_real = friedgut_p(n, k, to_double(phi));
  if (p_real > 1.0) {
    result.applicable = false;
    return result;
  }
  result.applicable = true;
  result.p = dyadic_round_up(p_real);
  result.measure = biased_measure_of_upset(family, result.p).value;
  mpq_class fraction(static_cast<long>(family.size()));
  fraction /= mpq_class(binomial(n, k));
  result.threshold = (mpq_class(1) - phi) * fraction;
  result.holds = result.measure > result.threshold;
  return result;
}

double redei_renyi_constant() { return std::sqrt(2.0 + 4.0 / (3.0 * std::numbers::pi)); }

BoundReport regime_ratio(long n, long k, double delta) {
  if (n < 2 || k < 0 || 2 * k > n) throw std::invalid_argument("need 0 <= k <= n/2");
  BoundReport report;
  report.name = "regime-ratio";
  report.inputs = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}};
  report.free_constants = {{"delta", delta}};
  const double log_n = std::log(static_cast<double>(n));
  const mpz_class layer = binomial(n, k);
  report.exact_components.emplace_back("binomial", mpq_class(layer));
  if (2 * k == n) {
    report.value = std::numeric_limits<double>::infinity();
    report.components.emplace_back("decay-bound", to_double(layer));
  } else {
    const double gap = static_cast<double>(n - 2 * k);
    report.value = static_cast<double>(n) / (gap * log_n);
    report.components.emplace_back(
        "decay-bound", std::exp(-delta * gap * log_n / static_cast<double>(n)) * to_double(layer));
  }
  report.components.emplace_back("reference-constant", redei_renyi_constant());
  return report;
}

BoundReport thm_main_trace(long n, long k, double c0, double delta) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("need 1 <= k <= n/2");
  if (!(c0 > 0)) throw std::invalid_argument("constant must be positive");
  if (!(delta > 0.0) || !(delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  const double p = friedgut_p(n, k, 0.5);
  if (p >= 1.0) throw std::invalid_argument("bias shift reaches 1; the chain does not apply");

  BoundReport report;
  report.name = "upper-bound-chain";
  report.inputs = {{"n", static_cast<double>(n)},
                   {"k", static_cast<double>(k)},
                   {"delta", delta}};
  report.free_constants = {{"c0", c0}};
  const double log_n = std::log(static_cast<double>(n));
  const double q = fk_threshold_q(p, delta / 2.0, c0, n);
  const double lhs = p + c0 * p * std::log(1.0 / p) * std::log(2.0 / delta) / log_n;
  const double ceiling = 2.0 * std::exp(-(1.0 - 2.0 * p) * log_n / (2.0 * c0 * p * std::log(1.0 / p)));
  report.components.emplace_back("shifted-bias", p);
  report.components.emplace_back("threshold-bias", q);
  report.components.emplace_back("contradiction-lhs", lhs);
  report.value = ceiling;
  return report;
}

BoundReport line_superset_bound(int q, long k) {
  static_cast<void>(factor_prime_power(q));  // validates that q is a prime power
  const long n = static_cast<long>(q) * q + q + 1;
  if (k < q + 1 || k > n) throw std::invalid_argument("uniformity must lie in [q+1, n]");

  BoundReport report;
  report.name = "line-superset-count";
  report.inputs = {{"q", static_cast<double>(q)},
                   {"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)}};
  const long d = q;
  const mpz_class point_count = n;
  const mpz_class single = binomial(n - d - 1, k - d - 1);
  const mpz_class pair = binomial(n - 2 * d - 1, k - 2 * d - 1);
  const mpz_class two_term = point_count * single - binomial(n, 2) * pair;
  mpq_class half_first(point_count * single);
  half_first /= 2;
  report.value = to_double(two_term);
  report.exact_value = mpq_class(two_term);
  report.exact_components.emplace_back("half-first-term", half_first);
  return report;
}

}  // namespace symfam
