#include "symfam/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace symfam {

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class int_pow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t integer_sqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

mpq_class probability(long num, long den) {
  if (den == 0) throw std::invalid_argument("probability: zero denominator");
  mpq_class p(num, den);
  p.canonicalize();
  if (p < 0 || p > 1) {
    throw std::invalid_argument("probability: value outside [0, 1]");
  }
  return p;
}

mpq_class dyadic_round_up(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("dyadic_round_up: negative value");
  if (x >= 1.0) return mpq_class(1);
  // x is a binary rational, so scaling by 2^64 and taking the ceiling is exact.
  mpq_class exact(x);
  mpz_class two64 = int_pow(2, 64);
  mpz_class scaled_num = exact.get_num() * two64;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), exact.get_den().get_mpz_t());
  mpq_class out(q, two64);
  out.canonicalize();
  return out;
}

double to_double(const mpz_class& v) { return v.get_d(); }

double to_double(const mpq_class& v) { return v.get_d(); }

}  // namespace symfam
