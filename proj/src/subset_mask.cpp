#include "symfam/subset_mask.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "symfam/errors.hpp"

namespace symfam {

SubsetMask::SubsetMask(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SubsetMask: ground set must be nonempty");
  if (n > kMaxGroundSet) throw capacity_error("SubsetMask: ground set exceeds capacity");
  if (n > kInlineBits) big_.assign(word_count(), 0);
}

SubsetMask SubsetMask::from_elements(int n, std::span<const int> elements_1based) {
  SubsetMask m(n);
  for (int e : elements_1based) {
    if (e < 1 || e > n) throw std::invalid_argument("SubsetMask: element outside [n]");
    m.set(e - 1);
  }
  return m;
}

SubsetMask SubsetMask::from_residues(int n, std::span<const int> residues_0based) {
  SubsetMask m(n);
  for (int r : residues_0based) {
    if (r < 0 || r >= n) throw std::invalid_argument("SubsetMask: residue outside Z_n");
    m.set(r);
  }
  return m;
}

SubsetMask SubsetMask::from_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > 64) throw std::invalid_argument("SubsetMask::from_bits: need 1 <= n <= 64");
  if (n < 64 && (bits >> n) != 0) {
    throw std::invalid_argument("SubsetMask::from_bits: bits beyond ground set");
  }
  SubsetMask m(n);
  m.small_[0] = bits;
  return m;
}

SubsetMask SubsetMask::full(int n) {
  SubsetMask m(n);
  auto* w = m.data();
  const int nw = m.word_count();
  for (int i = 0; i < nw; ++i) w[i] = ~0ULL;
  const int tail = n % 64;
  if (tail != 0) w[nw - 1] &= (~0ULL >> (64 - tail));
  return m;
}

std::uint64_t* SubsetMask::data() { return n_ > kInlineBits ? big_.data() : small_.data(); }

const std::uint64_t* SubsetMask::data() const {
  return n_ > kInlineBits ? big_.data() : small_.data();
}

int SubsetMask::count() const {
  const auto* w = data();
  int c = 0;
  for (int i = 0; i < word_count(); ++i) c += std::popcount(w[i]);
  return c;
}

bool SubsetMask::empty() const {
  const auto* w = data();
  for (int i = 0; i < word_count(); ++i) {
    if (w[i] != 0) return false;
  }
  return true;
}

bool SubsetMask::test(int pos) const {
  if (pos < 0 || pos >= n_) throw std::out_of_range("SubsetMask: position outside ground set");
  return (data()[pos >> 6] >> (pos & 63)) & 1;
}

void SubsetMask::set(int pos) {
  if (pos < 0 || pos >= n_) throw std::out_of_range("SubsetMask: position outside ground set");
  data()[pos >> 6] |= 1ULL << (pos & 63);
}

void SubsetMask::reset(int pos) {
  if (pos < 0 || pos >= n_) throw std::out_of_range("SubsetMask: position outside ground set");
  data()[pos >> 6] &= ~(1ULL << (pos & 63));
}

bool SubsetMask::contains_element(int e) const { return test(e - 1); }

void SubsetMask::check_same_ground(const SubsetMask& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("SubsetMask: mismatched ground sets");
  }
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  check_same_ground(other);
  const auto* a = data();
  const auto* b = other.data();
  for (int i = 0; i < word_count(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  check_same_ground(other);
  const auto* a = data();
  const auto* b = other.data();
  for (int i = 0; i < word_count(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

SubsetMask SubsetMask::united(const SubsetMask& other) const {
  check_same_ground(other);
  SubsetMask r(n_);
  const auto* a = data();
  const auto* b = other.data();
  auto* w = r.data();
  for (int i = 0; i < word_count(); ++i) w[i] = a[i] | b[i];
  return r;
}

SubsetMask SubsetMask::intersected(const SubsetMask& other) const {
  check_same_ground(other);
  SubsetMask r(n_);
  const auto* a = data();
  const auto* b = other.data();
  auto* w = r.data();
  for (int i = 0; i < word_count(); ++i) w[i] = a[i] & b[i];
  return r;
}

SubsetMask SubsetMask::complemented() const {
  SubsetMask r(n_);
  const auto* a = data();
  auto* w = r.data();
  const int nw = word_count();
  for (int i = 0; i < nw; ++i) w[i] = ~a[i];
  const int tail = n_ % 64;
  if (tail != 0) w[nw - 1] &= (~0ULL >> (64 - tail));
  return r;
}

SubsetMask SubsetMask::rotated(int shift) const {
  int s = shift % n_;
  if (s < 0) s += n_;
  if (s == 0) return *this;
  SubsetMask r(n_);
  if (n_ <= 64) {
    const std::uint64_t w = small_[0];
    const std::uint64_t mask = (n_ == 64) ? ~0ULL : ((1ULL << n_) - 1);
    r.small_[0] = ((w << s) | (w >> (n_ - s))) & mask;
    return r;
  }
  for (int i = 0; i < n_; ++i) {
    if (test(i)) r.set((i + s) % n_);
  }
  return r;
}

std::uint64_t SubsetMask::low_bits() const {
  if (n_ > 64) throw std::domain_error("SubsetMask::low_bits: ground set wider than one word");
  return small_[0];
}

std::span<const std::uint64_t> SubsetMask::words() const {
  return {data(), static_cast<std::size_t>(word_count())};
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int i = 0; i < word_count(); ++i) {
    std::uint64_t w = data()[i];
    while (w != 0) {
      out.push_back(i * 64 + std::countr_zero(w) + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::vector<int> SubsetMask::residues() const {
  auto out = elements();
  for (int& e : out) --e;
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool SubsetMask::operator==(const SubsetMask& other) const {
  if (n_ != other.n_) return false;
  const auto* a = data();
  const auto* b = other.data();
  return std::equal(a, a + word_count(), b);
}

std::strong_ordering SubsetMask::operator<=>(const SubsetMask& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  const auto* a = data();
  const auto* b = other.data();
  for (int i = word_count() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace symfam
