#include "symfam/family_ops.hpp"

#include <stdexcept>

#include "symfam/errors.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

SetFamily tensor_product(const SetFamily& a, const SetFamily& b) {
  const long long n = a.ground_size();
  const long long m = b.ground_size();
  if (n * m > SubsetMask::kMaxGroundSet) {
    throw capacity_error("tensor_product: combined ground set exceeds capacity");
  }
  const int nm = static_cast<int>(n * m);
  std::vector<SubsetMask> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.members()) {
    const auto xi = x.residues();
    for (const auto& y : b.members()) {
      const auto yj = y.residues();
      SubsetMask t(nm);
      for (int i : xi) {
        for (int j : yj) t.set(i * static_cast<int>(m) + j);
      }
      out.push_back(std::move(t));
    }
  }
  if (a.uniformity() && b.uniformity()) {
    return {nm, *a.uniformity() * *b.uniformity(), std::move(out)};
  }
  return {nm, std::move(out)};
}

SetFamily translates_family(const SubsetMask& base) {
  const int n = base.ground_size();
  std::vector<SubsetMask> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) out.push_back(base.rotated(s));
  return {n, base.count(), std::move(out)};
}

SetFamily superset_extension(const SetFamily& family, int l, std::uint64_t budget) {
  const int n = family.ground_size();
  if (!family.uniformity()) {
    throw std::invalid_argument("superset_extension: family must be uniform");
  }
  const int k = *family.uniformity();
  if (l < k || l > n) {
    throw std::invalid_argument("superset_extension: target size outside [k, n]");
  }
  const mpz_class volume = mpz_class(static_cast<unsigned long>(family.size())) *
                           binomial(n - k, l - k);
  if (volume > mpz_class(budget)) {
    throw budget_error("superset_extension: generated volume exceeds budget");
  }
  std::vector<SubsetMask> out;
  std::vector<int> extra(static_cast<std::size_t>(l - k));
  for (const auto& x : family.members()) {
    const auto free_pos = x.complemented().residues();
    const int f = static_cast<int>(free_pos.size());
    const int need = l - k;
    // Lexicographic combinations of the complement positions.
    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      SubsetMask s = x;
      for (int i = 0; i < need; ++i) {
        s.set(free_pos[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
      }
      out.push_back(std::move(s));
      int i = need - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == f - need + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < need; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return {n, l, std::move(out)};
}

SetFamily relabeled(const SetFamily& family, std::span<const int> images0) {
  const int n = family.ground_size();
  if (static_cast<int>(images0.size()) != n) {
    throw std::invalid_argument("relabeled: image list length differs from ground set");
  }
  std::vector<SubsetMask> out;
  out.reserve(family.size());
  for (const auto& x : family.members()) {
    SubsetMask y(n);
    for (int r : x.residues()) {
      const int img = images0[static_cast<std::size_t>(r)];
      if (img < 0 || img >= n) throw std::invalid_argument("relabeled: image outside range");
      y.set(img);
    }
    out.push_back(std::move(y));
  }
  if (family.uniformity()) return {n, *family.uniformity(), std::move(out)};
  return {n, std::move(out)};
}

GroupWitness tensor_witness(const GroupWitness& left, const GroupWitness& right) {
  const int n = left.n;
  const int m = right.n;
  if (n < 1 || m < 1) throw std::invalid_argument("tensor_witness: empty ground set");
  GroupWitness combined;
  combined.n = n * m;
  for (const Permutation& g : left.generators) {
    std::vector<int> images(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        images[static_cast<std::size_t>(i) * m + j] = g.image(i) * m + j;
      }
    }
    combined.generators.emplace_back(std::move(images));
  }
  for (const Permutation& h : right.generators) {
    std::vector<int> images(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        images[static_cast<std::size_t>(i) * m + j] = i * m + h.image(j);
      }
    }
    combined.generators.emplace_back(std::move(images));
  }
  return combined;
}

}  // namespace symfam
