#include "symfam/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symfam/errors.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

namespace {

std::uint64_t rotate_word(std::uint64_t w, int shift, int n) {
  shift %= n;
  if (shift < 0) shift += n;
  if (shift == 0) return w;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return ((w << shift) | (w >> (n - shift))) & mask;
}

// d lies in u - v iff u meets v shifted by d; the union of u rotated by every
// -b with b in v is exactly the difference set u - v.
bool cross_intersecting(const SubsetMask& u, const SubsetMask& v) {
  const int n = u.ground_size();
  if (n <= 63) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t uw = u.low_bits();
    std::uint64_t acc = 0;
    for (int b : v.residues()) {
      acc |= rotate_word(uw, -b, n);
      if (acc == full) return true;
    }
    return acc == full;
  }
  SubsetMask acc(n);
  const SubsetMask full = SubsetMask::full(n);
  for (int b : v.residues()) {
    acc = acc.united(u.rotated(-b));
    if (acc == full) return true;
  }
  return acc == full;
}

std::vector<NecklaceOrbit> decompose_small(int n, int k) {
  std::vector<NecklaceOrbit> orbits;
  if (k == 0) {
    orbits.push_back(NecklaceOrbit{n, 0, SubsetMask(n), 1, false});
    return orbits;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t candidate = (std::uint64_t{1} << k) - 1;
  while (candidate < limit) {
    std::uint64_t least = candidate;
    int fixing = 1;
    for (int t = 1; t < n; ++t) {
      const std::uint64_t rotated = rotate_word(candidate, t, n);
      if (rotated < least) {
        least = rotated;
        break;  // not the orbit representative
      }
      if (rotated == candidate) ++fixing;
    }
    if (least == candidate) {
      // re-scan for the exact stabilizer size, since the loop above may stop early
      fixing = 0;
      for (int t = 0; t < n; ++t) {
        if (rotate_word(candidate, t, n) == candidate) ++fixing;
      }
      NecklaceOrbit orbit;
      orbit.n = n;
      orbit.k = k;
      orbit.representative = SubsetMask::from_bits(n, candidate);
      orbit.size = n / fixing;
      orbit.internally_intersecting =
          cross_intersecting(orbit.representative, orbit.representative);
      orbits.push_back(std::move(orbit));
    }
    const std::uint64_t low = candidate & (~candidate + 1);
    const std::uint64_t ripple = candidate + low;
    if (ripple >= limit || ripple < candidate) break;
    candidate = ripple | (((candidate ^ ripple) >> 2) / low);
  }
  return orbits;
}

std::vector<NecklaceOrbit> decompose_large(int n, int k) {
  std::vector<NecklaceOrbit> orbits;
  std::vector<int> positions(k);
  std::iota(positions.begin(), positions.end(), 0);
  for (;;) {
    SubsetMask candidate(n);
    for (int pos : positions) candidate.set(pos);
    bool is_least = true;
    int fixing = 0;
    for (int t = 0; t < n; ++t) {
      const SubsetMask rotated = candidate.rotated(t);
      if (rotated < candidate) {
        is_least = false;
        break;
      }
      if (rotated == candidate) ++fixing;
    }
    if (is_least) {
      NecklaceOrbit orbit;
      orbit.n = n;
      orbit.k = k;
      orbit.representative = candidate;
      orbit.size = n / fixing;
      orbit.internally_intersecting = cross_intersecting(candidate, candidate);
      orbits.push_back(std::move(orbit));
    }
    int bump = k - 1;
    while (bump >= 0 && positions[bump] == n - k + bump) --bump;
    if (bump < 0) break;
    ++positions[bump];
    for (int i = bump + 1; i < k; ++i) positions[i] = positions[i - 1] + 1;
  }
  return orbits;
}

// Max-weight clique over the internally intersecting orbits; edges join
// cross-intersecting pairs. Prunes only strictly dominated subtrees so every
// optimal union is visited, keeping the reported witness canonical.
class OrbitCliqueSearch {
 public:
  OrbitCliqueSearch(std::vector<NecklaceOrbit> vertices, std::uint64_t node_budget)
      : vertices_(std::move(vertices)), node_budget_(node_budget) {
    const std::size_t m = vertices_.size();
    adjacency_.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const bool edge =
            cross_intersecting(vertices_[i].representative, vertices_[j].representative);
        adjacency_[i][j] = edge;
        adjacency_[j][i] = edge;
      }
    }
  }

  void run() {
    std::vector<std::size_t> greedy;
    long greedy_weight = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const bool compatible = std::all_of(greedy.begin(), greedy.end(),
                                          [&](std::size_t j) { return adjacency_[i][j]; });
      if (compatible) {
        greedy.push_back(i);
        greedy_weight += vertices_[i].size;
      }
    }
    best_weight_ = greedy_weight;
    best_ = std::move(greedy);

    std::vector<std::size_t> all(vertices_.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> chosen;
    descend(all, chosen, 0);
  }

  [[nodiscard]] long best_weight() const { return best_weight_; }
  [[nodiscard]] const std::vector<std::size_t>& best() const { return best_; }
  [[nodiscard]] const std::vector<NecklaceOrbit>& vertices() const { return vertices_; }
  [[nodiscard]] bool stopped_early() const { return stopped_; }

 private:
  std::vector<NecklaceOrbit> vertices_;
  std::vector<std::vector<char>> adjacency_;
  std::uint64_t node_budget_;
  std::uint64_t nodes_ = 0;
  long best_weight_ = 0;
  std::vector<std::size_t> best_;
  bool stopped_ = false;

  [[nodiscard]] std::vector<SubsetMask> signature(const std::vector<std::size_t>& chosen) const {
    std::vector<SubsetMask> reps;
    reps.reserve(chosen.size());
    for (std::size_t i : chosen) reps.push_back(vertices_[i].representative);
    std::sort(reps.begin(), reps.end());
    return reps;
  }

  void offer(const std::vector<std::size_t>& chosen, long weight) {
    if (weight > best_weight_) {
      best_weight_ = weight;
      best_ = chosen;
      return;
    }
    if (weight == best_weight_ && signature(chosen) < signature(best_)) best_ = chosen;
  }

  void descend(const std::vector<std::size_t>& candidates, std::vector<std::size_t>& chosen,
               long weight) {
    if (stopped_) return;
    if (++nodes_ > node_budget_) {
      stopped_ = true;
      return;
    }
    offer(chosen, weight);
    long remaining = 0;
    for (std::size_t i : candidates) remaining += vertices_[i].size;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      if (weight + remaining < best_weight_) return;  // even taking everything left loses
      const std::size_t v = candidates[idx];
      std::vector<std::size_t> next;
      for (std::size_t later = idx + 1; later < candidates.size(); ++later) {
        if (adjacency_[v][candidates[later]]) next.push_back(candidates[later]);
      }
      chosen.push_back(v);
      descend(next, chosen, weight + vertices_[v].size);
      chosen.pop_back();
      remaining -= vertices_[v].size;
    }
  }
};

SetFamily expand_orbits(int n, int k, const std::vector<NecklaceOrbit>& vertices,
                        const std::vector<std::size_t>& chosen) {
  std::vector<SubsetMask> members;
  for (std::size_t i : chosen) {
    for (int t = 0; t < n; ++t) members.push_back(vertices[i].representative.rotated(t));
  }
  return SetFamily(n, k, std::move(members));
}

SetFamily whole_layer(int n, int k) {
  std::vector<SubsetMask> members;
  std::vector<int> positions(k);
  std::iota(positions.begin(), positions.end(), 0);
  for (;;) {
    SubsetMask m(n);
    for (int pos : positions) m.set(pos);
    members.push_back(std::move(m));
    int bump = k - 1;
    while (bump >= 0 && positions[bump] == n - k + bump) --bump;
    if (bump < 0) break;
    ++positions[bump];
    for (int i = bump + 1; i < k; ++i) positions[i] = positions[i - 1] + 1;
  }
  return SetFamily(n, k, std::move(members));
}

}  // namespace

std::vector<NecklaceOrbit> cyclic_orbit_decomposition(int n, int k, long budget) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("layer parameters out of range");
  if (binomial(n, k) > budget) throw budget_error("layer too large to decompose");
  return n <= 63 ? decompose_small(n, k) : decompose_large(n, k);
}

OracleResult s_cyclic(int n, int k, long layer_budget, std::uint64_t node_budget,
                      long witness_member_cap) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("layer parameters out of range");
  OracleResult result;
  result.n = n;
  result.k = k;

  if (2 * k > n) {
    result.value = binomial(n, k);
    result.exact_for_all_symmetric = true;
    result.exhaustive = true;
    if (result.value <= witness_member_cap) result.witness = whole_layer(n, k);
    return result;
  }

  result.exact_for_all_symmetric = is_prime(static_cast<std::uint64_t>(n));

  // A set whose differences cover Z_n needs k(k-1)+1 >= n, so below that no
  // orbit is even internally intersecting.
  if (static_cast<long>(k) * (k - 1) + 1 < n) {
    result.value = 0;
    result.exhaustive = true;
    result.witness = SetFamily(n, k, {});
    return result;
  }

  std::vector<NecklaceOrbit> internal;
  for (NecklaceOrbit& orbit : cyclic_orbit_decomposition(n, k, layer_budget)) {
    if (orbit.internally_intersecting) internal.push_back(std::move(orbit));
  }
  if (internal.empty()) {
    result.value = 0;
    result.exhaustive = true;
    result.witness = SetFamily(n, k, {});
    return result;
  }
  const double graph_cost = static_cast<double>(internal.size()) * internal.size() * k;
  if (graph_cost > 2e9) throw budget_error("cross-intersection graph too large");

  std::sort(internal.begin(), internal.end(), [](const NecklaceOrbit& a, const NecklaceOrbit& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.representative < b.representative;
  });

  OrbitCliqueSearch search(std::move(internal), node_budget);
  search.run();
  result.value = search.best_weight();
  result.exhaustive = !search.stopped_early();
  if (search.best_weight() <= witness_member_cap) {
    result.witness = expand_orbits(n, k, search.vertices(), search.best());
  }
  return result;
}

}  // namespace symfam
