#include "symfam/gf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "symfam/errors.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

namespace {

// Coefficient digits over Z_p, constant term first, trimmed. Zero is {}.
using ZpPoly = std::vector<int>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b, coefficients mod p.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int lead = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    if (lead != 0) {
      for (int j = 0; j <= db; ++j) {
        int v = (a[shift + j] - lead * b[j]) % p;
        a[shift + j] = v < 0 ? v + p : v;
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of idx.
ZpPoly monic_from_index(std::uint64_t idx, int degree, int p) {
  ZpPoly out(degree + 1, 0);
  for (int j = 0; j < degree; ++j) {
    out[j] = static_cast<int>(idx % p);
    idx /= p;
  }
  out[degree] = 1;
  return out;
}

bool zp_irreducible(const ZpPoly& candidate, int p) {
  const int degree = static_cast<int>(candidate.size()) - 1;
  if (degree == 1) return true;
  if (candidate[0] == 0) return false;  // divisible by x
  for (int d = 1; 2 * d <= degree; ++d) {
    std::uint64_t count = 1;
    for (int j = 0; j < d; ++j) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (zp_mod(candidate, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1 || m > kMaxDegree) throw std::invalid_argument("extension degree out of range");
  long q = 1;
  for (int j = 0; j < m; ++j) {
    q *= p;
    if (q > kMaxOrder) throw capacity_error("field order exceeds table capacity");
  }
  q_ = static_cast<int>(q);

  std::uint64_t modulus_index = 0;
  for (;; ++modulus_index) {
    ZpPoly candidate = monic_from_index(modulus_index, m, p);
    if (zp_irreducible(candidate, p)) {
      modulus_ = candidate;
      break;
    }
  }

  // Raw multiply before the log tables exist: convolve digit vectors, then
  // fold degrees >= m down with the monic modulus.
  auto raw_mul = [this](int a, int b) -> int {
    std::vector<int> da(m_, 0);
    std::vector<int> db(m_, 0);
    for (int j = 0; j < m_; ++j, a /= p_) da[j] = a % p_;
    for (int j = 0; j < m_; ++j, b /= p_) db[j] = b % p_;
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
      if (da[i] == 0) continue;
      for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * m_ - 2; i >= m_; --i) {
      const int lead = prod[i];
      if (lead == 0) continue;
      prod[i] = 0;
      for (int j = 0; j < m_; ++j) {
        int v = (prod[i - m_ + j] - lead * modulus_[j]) % p_;
        prod[i - m_ + j] = v < 0 ? v + p_ : v;
      }
    }
    int packed = 0;
    for (int j = m_ - 1; j >= 0; --j) packed = packed * p_ + prod[j];
    return packed;
  };
  auto raw_pow = [&raw_mul](int a, long e) -> int {
    int acc = 1;
    int base = a;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = raw_mul(acc, base);
      base = raw_mul(base, base);
    }
    return acc;
  };

  const long group_order = q_ - 1;
  const std::vector<std::uint64_t> prime_factors = distinct_prime_factors(static_cast<std::uint64_t>(group_order));
  for (int a = 1; a < q_; ++a) {
    bool full_order = true;
    for (std::uint64_t r : prime_factors) {
      if (raw_pow(a, group_order / static_cast<long>(r)) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      generator_ = a;
      break;
    }
  }
  if (generator_ == 0) throw std::logic_error("no generator found");

  exp_table_.assign(group_order, 0);
  log_table_.assign(q_, 0);
  int cur = 1;
  for (long i = 0; i < group_order; ++i) {
    exp_table_[i] = cur;
    log_table_[cur] = static_cast<int>(i);
    cur = raw_mul(cur, generator_);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");
  // Bijectivity of exp over the nonzero elements certifies the tables.
  std::vector<int> seen = exp_table_;
  std::sort(seen.begin(), seen.end());
  for (long i = 0; i < group_order; ++i) {
    if (seen[i] != i + 1) throw std::logic_error("exp table is not a bijection");
  }
}

void GaloisField::check_element(int a) const {
  if (a < 0 || a >= q_) throw std::out_of_range("field element out of range");
}

int GaloisField::add(int a, int b) const {
  check_element(a);
  check_element(b);
  if (p_ == 2) return a ^ b;
  int packed = 0;
  int scale = 1;
  for (int j = 0; j < m_; ++j) {
    packed += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return packed;
}

int GaloisField::neg(int a) const {
  check_element(a);
  if (p_ == 2) return a;
  int packed = 0;
  int scale = 1;
  for (int j = 0; j < m_; ++j) {
    packed += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return packed;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::mul(int a, int b) const {
  check_element(a);
  check_element(b);
  if (a == 0 || b == 0) return 0;
  const long e = static_cast<long>(log_table_[a]) + log_table_[b];
  return exp_table_[e % (q_ - 1)];
}

int GaloisField::inv(int a) const {
  check_element(a);
  if (a == 0) throw std::domain_error("zero has no inverse");
  const long e = (q_ - 1 - log_table_[a]) % (q_ - 1);
  return exp_table_[e];
}

int GaloisField::pow(int a, long e) const {
  check_element(a);
  if (a == 0) {
    if (e < 0) throw std::domain_error("zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  long r = (static_cast<long>(log_table_[a]) * (e % (q_ - 1))) % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_table_[r];
}

int GaloisField::exp(long e) const {
  long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_table_[r];
}

int GaloisField::log(int a) const {
  check_element(a);
  if (a == 0) throw std::domain_error("zero has no discrete log");
  return log_table_[a];
}

namespace gfpoly {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly monic_from_index(const GaloisField& f, std::uint64_t idx, int degree) {
  Poly out(degree + 1, 0);
  const auto q = static_cast<std::uint64_t>(f.order());
  for (int j = 0; j < degree; ++j) {
    out[j] = static_cast<int>(idx % q);
    idx /= q;
  }
  out[degree] = 1;
  return out;
}

}  // namespace

Poly mul(const GaloisField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(prod);
  return prod;
}

Poly mod(const GaloisField& f, Poly a, const Poly& modulus) {
  if (modulus.empty()) throw std::invalid_argument("zero modulus");
  const int db = static_cast<int>(modulus.size()) - 1;
  const int lead_inv = f.inv(modulus.back());
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int factor = f.mul(a.back(), lead_inv);
    const int shift = static_cast<int>(a.size()) - 1 - db;
    if (factor != 0) {
      for (int j = 0; j <= db; ++j) {
        a[shift + j] = f.sub(a[shift + j], f.mul(factor, modulus[j]));
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool is_irreducible(const GaloisField& f, const Poly& candidate) {
  const int degree = static_cast<int>(candidate.size()) - 1;
  if (degree < 1) return false;
  if (degree == 1) return true;
  if (candidate[0] == 0) return false;
  for (int d = 1; 2 * d <= degree; ++d) {
    std::uint64_t count = 1;
    for (int j = 0; j < d; ++j) {
      count *= static_cast<std::uint64_t>(f.order());
      if (count > (std::uint64_t{1} << 22)) {
        throw capacity_error("irreducibility trial division too large");
      }
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (mod(f, candidate, monic_from_index(f, idx, d)).empty()) return false;
    }
  }
  return true;
}

Poly x_power_mod(const GaloisField& f, std::uint64_t e, const Poly& modulus) {
  Poly result{1};
  if (static_cast<int>(modulus.size()) - 1 <= 0) return {};
  Poly base = mod(f, Poly{0, 1}, modulus);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mod(f, mul(f, result, base), modulus);
    base = mod(f, mul(f, base, base), modulus);
  }
  return result;
}

Poly first_primitive_polynomial(const GaloisField& f, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::uint64_t total = 1;
  for (int j = 0; j < degree; ++j) {
    const std::uint64_t next = total * static_cast<std::uint64_t>(f.order());
    if (next / f.order() != total) throw capacity_error("field power overflows");
    total = next;
  }
  const std::uint64_t group_order = total - 1;
  if (group_order > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
    throw capacity_error("multiplicative order too large to factor");
  }
  const std::vector<std::uint64_t> prime_factors = distinct_prime_factors(group_order);

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly candidate = monic_from_index(f, idx, degree);
    if (!is_irreducible(f, candidate)) continue;
    bool primitive = true;
    for (std::uint64_t r : prime_factors) {
      const Poly probe = x_power_mod(f, group_order / r, candidate);
      if (probe == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    if (x_power_mod(f, group_order, candidate) != Poly{1}) {
      throw std::logic_error("x order does not divide the group order");
    }
    return candidate;
  }
  throw std::logic_error("no primitive polynomial of the requested degree");
}

}  // namespace gfpoly

}  // namespace symfam
