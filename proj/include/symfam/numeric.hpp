#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace symfam {

// C(n, k) as an exact integer; zero when k is outside [0, n].
[[nodiscard]] mpz_class binomial(std::int64_t n, std::int64_t k);

// base^exp as an exact integer.
[[nodiscard]] mpz_class int_pow(const mpz_class& base, unsigned long exp);

[[nodiscard]] bool is_prime(std::uint64_t n);

// Distinct prime divisors, ascending.
[[nodiscard]] std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// Largest s with s*s <= n.
[[nodiscard]] std::uint64_t integer_sqrt(std::uint64_t n);

// Probability as an exact rational in [0, 1]; throws std::invalid_argument
// outside that range or on a zero denominator.
[[nodiscard]] mpq_class probability(long num, long den);

// Smallest dyadic rational with denominator 2^64 that is >= x.
// Requires x in [0, 1]; values of x above 1 clamp to 1.
[[nodiscard]] mpq_class dyadic_round_up(double x);

[[nodiscard]] double to_double(const mpz_class& v);
[[nodiscard]] double to_double(const mpq_class& v);

}  // namespace symfam
