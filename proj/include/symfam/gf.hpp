#pragma once

#include <cstdint>
#include <vector>

namespace symfam {

/**
 * The field GF(p^m), p prime, built deterministically: the modulus is the
 * first monic irreducible of degree m when residue indices are scanned
 * ascending, and the generator is the least element of full multiplicative
 * order. Elements are indices in [0, p^m): the base-p digits of an index are
 * the polynomial coefficients, constant term in the least significant digit.
 *
 * Construction verifies irreducibility by trial division over all candidate
 * factor degrees and verifies the generator order against the factorization
 * of p^m - 1.
 */
class GaloisField {
 public:
  static constexpr int kMaxOrder = 1 << 16;
  static constexpr int kMaxDegree = 12;

  GaloisField(int p, int m);

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int order() const { return q_; }

  [[nodiscard]] int add(int a, int b) const;
  [[nodiscard]] int sub(int a, int b) const;
  [[nodiscard]] int neg(int a) const;
  [[nodiscard]] int mul(int a, int b) const;
  [[nodiscard]] int inv(int a) const;
  [[nodiscard]] int pow(int a, long e) const;

  [[nodiscard]] int generator() const { return generator_; }
  // g^e by table; e may be any integer, reduced mod q-1.
  [[nodiscard]] int exp(long e) const;
  // Discrete log base g of a nonzero element.
  [[nodiscard]] int log(int a) const;

  // Monic modulus coefficients c_0 ... c_m (c_m = 1).
  [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }

 private:
  int p_;
  int m_;
  int q_;
  int generator_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_table_;  // size q-1
  std::vector<int> log_table_;  // size q, log(0) unused

  void check_element(int a) const;
};

/**
 * Polynomials with coefficients in a GaloisField, for degree-level work the
 * field tables cannot cover (finding primitive polynomials over non-prime
 * base fields). Coefficient vectors run constant-first with no trailing
 * zeros; the zero polynomial is the empty vector.
 */
namespace gfpoly {

using Poly = std::vector<int>;

[[nodiscard]] Poly mul(const GaloisField& f, const Poly& a, const Poly& b);
[[nodiscard]] Poly mod(const GaloisField& f, Poly a, const Poly& modulus);
[[nodiscard]] bool is_irreducible(const GaloisField& f, const Poly& candidate);

// x^e mod modulus, e >= 0.
[[nodiscard]] Poly x_power_mod(const GaloisField& f, std::uint64_t e, const Poly& modulus);

/**
 * Lexicographically first monic irreducible of the degree whose companion
 * matrix powers sweep every nonzero vector: the polynomial is primitive,
 * meaning x attains multiplicative order q^degree - 1 modulo it.
 */
[[nodiscard]] Poly first_primitive_polynomial(const GaloisField& f, int degree);

}  // namespace gfpoly

}  // namespace symfam
