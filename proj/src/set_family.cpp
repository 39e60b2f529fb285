#include "symfam/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace symfam {

SetFamily::SetFamily(int n, std::vector<SubsetMask> members)
    : n_(n), members_(std::move(members)) {
  canonicalize();
  if (!members_.empty()) {
    const int first = members_.front().count();
    const bool uniform = std::all_of(members_.begin(), members_.end(),
                                     [&](const SubsetMask& m) { return m.count() == first; });
    if (uniform) k_ = first;
  }
}

SetFamily::SetFamily(int n, int k, std::vector<SubsetMask> members)
    : n_(n), k_(k), members_(std::move(members)) {
  if (k < 0 || k > n) throw std::invalid_argument("SetFamily: uniformity outside [0, n]");
  canonicalize();
  for (const auto& m : members_) {
    if (m.count() != k) {
      throw std::invalid_argument("SetFamily: member size differs from stated uniformity");
    }
  }
}

void SetFamily::canonicalize() {
  if (n_ < 1) throw std::invalid_argument("SetFamily: ground set must be nonempty");
  if (n_ > SubsetMask::kMaxGroundSet) {
    throw std::invalid_argument("SetFamily: ground set exceeds capacity");
  }
  for (const auto& m : members_) {
    if (m.ground_size() != n_) {
      throw std::invalid_argument("SetFamily: member over a different ground set");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const SubsetMask& m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

bool SetFamily::operator==(const SetFamily& other) const {
  return n_ == other.n_ && members_ == other.members_;
}

bool is_intersecting(const SetFamily& family) {
  const auto& mem = family.members();
  const std::size_t m = mem.size();
  if (m <= 1) return true;
  if (family.ground_size() <= 64) {
    // Hot path: the pair scan over single-word masks dominates large checks.
    std::vector<std::uint64_t> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = mem[i].low_bits();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const std::uint64_t wi = w[i];
      for (std::size_t j = i + 1; j < m; ++j) {
        if ((wi & w[j]) == 0) return false;
      }
    }
    return true;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!mem[i].intersects(mem[j])) return false;
    }
  }
  return true;
}

}  // namespace symfam
