#include "symfam/permutation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "symfam/errors.hpp"

namespace symfam {

Permutation::Permutation(std::vector<int> images0) : images_(std::move(images0)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("Permutation: empty image table");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: image table is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::rotation(int n, int shift) {
  int s = shift % n;
  if (s < 0) s += n;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + s) % n;
  return Permutation(std::move(img));
}

Permutation Permutation::from_images1(const std::vector<int>& images1) {
  std::vector<int> img(images1.size());
  for (std::size_t i = 0; i < images1.size(); ++i) img[i] = images1[i] - 1;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::images1() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("Permutation: composing different degrees");
  }
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) {
    img[static_cast<std::size_t>(i)] = image(other.image(i));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(image(i))] = i;
  return Permutation(std::move(img));
}

SubsetMask Permutation::apply(const SubsetMask& m) const {
  if (m.ground_size() != degree()) {
    throw std::invalid_argument("Permutation: mask over a different ground set");
  }
  SubsetMask out(degree());
  for (int r : m.residues()) out.set(image(r));
  return out;
}

SetFamily Permutation::apply(const SetFamily& family) const {
  std::vector<SubsetMask> out;
  out.reserve(family.size());
  for (const auto& x : family.members()) out.push_back(apply(x));
  if (family.uniformity()) {
    return {family.ground_size(), *family.uniformity(), std::move(out)};
  }
  return {family.ground_size(), std::move(out)};
}

namespace {

void check_witness_shape(const GroupWitness& witness) {
  if (witness.n < 1) throw std::invalid_argument("GroupWitness: empty ground set");
  if (witness.generators.empty()) {
    throw std::invalid_argument("GroupWitness: no generators");
  }
  for (const auto& g : witness.generators) {
    if (g.degree() != witness.n) {
      throw std::invalid_argument("GroupWitness: generator degree differs from ground set");
    }
  }
}

}  // namespace

SubsetMask orbit_of(const GroupWitness& witness, int pos0) {
  check_witness_shape(witness);
  SubsetMask seen(witness.n);
  std::vector<int> frontier{pos0};
  seen.set(pos0);
  while (!frontier.empty()) {
    const int p = frontier.back();
    frontier.pop_back();
    for (const auto& g : witness.generators) {
      const int q = g.image(p);
      if (!seen.test(q)) {
        seen.set(q);
        frontier.push_back(q);
      }
    }
  }
  return seen;
}

bool verify_symmetric_witness(const SetFamily& family, const GroupWitness& witness) {
  check_witness_shape(witness);
  if (witness.n != family.ground_size()) return false;
  for (const auto& g : witness.generators) {
    for (const auto& x : family.members()) {
      if (!family.contains(g.apply(x))) return false;
    }
  }
  return orbit_of(witness, 0).count() == witness.n;
}

std::vector<Permutation> generated_group(const GroupWitness& witness, std::uint64_t element_cap) {
  check_witness_shape(witness);
  std::set<Permutation> closed;
  std::vector<Permutation> frontier{Permutation::identity(witness.n)};
  closed.insert(frontier.front());
  while (!frontier.empty()) {
    const Permutation g = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& gen : witness.generators) {
      Permutation h = gen.compose(g);
      if (closed.insert(h).second) {
        if (closed.size() > element_cap) {
          throw budget_error("generated_group: element cap exceeded");
        }
        frontier.push_back(std::move(h));
      }
    }
  }
  return {closed.begin(), closed.end()};
}

namespace {

/**
 * Backtracking point-image assignment. Candidate images must match on the
 * per-point member-count signature and, pairwise against already assigned
 * points, on the two-point member-count signature; fully mapped members must
 * land in the family. Positions are assigned in ascending order and images
 * tried ascending, so the first hit is the lexicographically least
 * automorphism with the requested 1 -> target constraint.
 */
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const SetFamily& family)
      : family_(family), n_(family.ground_size()) {
    degree_.assign(static_cast<std::size_t>(n_), 0);
    codegree_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (const auto& x : family_.members()) {
      const auto pts = x.residues();
      for (int a : pts) {
        ++degree_[static_cast<std::size_t>(a)];
        for (int b : pts) {
          if (a != b) ++codegree_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
        }
      }
    }
  }

  std::optional<Permutation> find(int source0, int target0) {
    images_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    if (!compatible(source0, target0)) return std::nullopt;
    images_[static_cast<std::size_t>(source0)] = target0;
    used_[static_cast<std::size_t>(target0)] = true;
    if (extend(0)) {
      Permutation p(images_);
      // The pruning invariants are necessary conditions only; accept after a
      // full setwise check.
      if (p.apply(family_) == family_) return p;
      throw std::logic_error("automorphism search accepted a non-automorphism");
    }
    return std::nullopt;
  }

 private:
  bool compatible(int a, int b) const {
    return degree_[static_cast<std::size_t>(a)] == degree_[static_cast<std::size_t>(b)];
  }

  int codeg(int a, int b) const {
    return codegree_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }

  bool pair_consistent(int p, int img) const {
    for (int q = 0; q < n_; ++q) {
      const int qi = images_[static_cast<std::size_t>(q)];
      if (q == p || qi < 0) continue;
      if (codeg(p, q) != codeg(img, qi)) return false;
    }
    return true;
  }

  bool members_consistent() const {
    for (const auto& x : family_.members()) {
      SubsetMask img(n_);
      bool complete = true;
      for (int r : x.residues()) {
        const int ir = images_[static_cast<std::size_t>(r)];
        if (ir < 0) {
          complete = false;
          break;
        }
        img.set(ir);
      }
      if (complete && !family_.contains(img)) return false;
    }
    return true;
  }

  bool extend(int pos) {
    while (pos < n_ && images_[static_cast<std::size_t>(pos)] >= 0) ++pos;
    if (pos == n_) return members_consistent();
    for (int img = 0; img < n_; ++img) {
      if (used_[static_cast<std::size_t>(img)] || !compatible(pos, img)) continue;
      if (!pair_consistent(pos, img)) continue;
      images_[static_cast<std::size_t>(pos)] = img;
      used_[static_cast<std::size_t>(img)] = true;
      if (members_consistent() && extend(pos + 1)) return true;
      images_[static_cast<std::size_t>(pos)] = -1;
      used_[static_cast<std::size_t>(img)] = false;
    }
    return false;
  }

  const SetFamily& family_;
  int n_;
  std::vector<int> degree_;
  std::vector<int> codegree_;
  std::vector<int> images_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Permutation> find_automorphism_sending_one(const SetFamily& family,
                                                         int target_1based, int ground_cap) {
  const int n = family.ground_size();
  if (n > ground_cap) {
    throw budget_error(
        "automorphism search: ground set above exact-search cap, verify a witness instead");
  }
  if (target_1based < 1 || target_1based > n) {
    throw std::invalid_argument("find_automorphism_sending_one: target outside [n]");
  }
  AutomorphismSearch search(family);
  return search.find(0, target_1based - 1);
}

bool automorphism_transitivity_search(const SetFamily& family, int ground_cap) {
  const int n = family.ground_size();
  if (n > ground_cap) {
    throw budget_error(
        "automorphism search: ground set above exact-search cap, verify a witness instead");
  }
  AutomorphismSearch search(family);
  for (int target = 1; target < n; ++target) {
    if (!search.find(0, target)) return false;
  }
  return true;
}

mpq_class average_intersection_identity(const SubsetMask& x, const GroupWitness& witness,
                                        std::uint64_t element_cap) {
  check_witness_shape(witness);
  if (x.ground_size() != witness.n) {
    throw std::invalid_argument("average_intersection_identity: mask and witness disagree on n");
  }
  if (orbit_of(witness, 0).count() != witness.n) {
    throw std::invalid_argument("average_intersection_identity: witness group is not transitive");
  }
  const auto group = generated_group(witness, element_cap);
  mpz_class total = 0;
  for (const auto& g : group) {
    total += g.apply(x).intersected(x).count();
  }
  mpq_class avg(total, mpz_class(static_cast<unsigned long>(group.size())));
  avg.canonicalize();
  return avg;
}

}  // namespace symfam
