#include "symfam/covers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symfam/numeric.hpp"
#include "symfam/runs.hpp"

namespace symfam {

namespace {

void check_residues(const std::vector<int>& residues, int n) {
  if (n < 1) throw std::invalid_argument("difference cover: need n >= 1");
  for (int r : residues) {
    if (r < 0 || r >= n) throw std::invalid_argument("difference cover: residue outside Z_n");
  }
}

int counting_lower_bound(int n) {
  // Smallest h with h(h-1) + 1 >= n.
  int h = 1;
  while (static_cast<long>(h) * (h - 1) + 1 < n) ++h;
  return h;
}

class CoverStratumSearch {
 public:
  CoverStratumSearch(int n, int target, std::uint64_t budget, std::uint64_t& nodes)
      : n_(n), target_(target), budget_(budget), nodes_(nodes) {}

  // First cover of the target size in ascending element order, or empty.
  // Returns false through exhausted() when the budget dies first.
  std::vector<int> run() {
    chosen_.assign(1, 0);
    covered_.assign(static_cast<std::size_t>(n_), false);
    covered_[0] = true;
    covered_count_ = 1;
    found_.clear();
    exhausted_ = false;
    descend(1);
    return found_;
  }

  [[nodiscard]] bool exhausted() const { return exhausted_; }

 private:
  bool charge_node() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  // Depth-first over ascending elements. The gain bound counts at most 2s
  // fresh differences for the element joining a set of size s.
  bool descend(int depth) {
    if (covered_count_ == n_ && depth == target_) {
      found_ = chosen_;
      return true;
    }
    if (depth == target_) return false;
    const int s = depth;
    long best_gain = 0;
    for (int j = s; j < target_; ++j) best_gain += 2L * j;
    if (covered_count_ + best_gain < n_) return false;
    const int hi = (depth == 1) ? n_ / 2 : n_ - 1;
    for (int x = chosen_.back() + 1; x <= hi; ++x) {
      if (!charge_node()) return false;
      std::vector<int> fresh;
      for (int y : chosen_) {
        int d1 = x - y;
        int d2 = y - x + n_;
        if (d2 >= n_) d2 -= n_;
        if (!covered_[static_cast<std::size_t>(d1)]) {
          covered_[static_cast<std::size_t>(d1)] = true;
          fresh.push_back(d1);
        }
        if (!covered_[static_cast<std::size_t>(d2)]) {
          covered_[static_cast<std::size_t>(d2)] = true;
          fresh.push_back(d2);
        }
      }
      covered_count_ += static_cast<int>(fresh.size());
      chosen_.push_back(x);
      if (descend(depth + 1)) return true;
      chosen_.pop_back();
      covered_count_ -= static_cast<int>(fresh.size());
      for (int d : fresh) covered_[static_cast<std::size_t>(d)] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<int> chosen_;
  std::vector<bool> covered_;
  int covered_count_ = 0;
  std::vector<int> found_;
  bool exhausted_ = false;
};

std::vector<int> greedy_cover(int n) {
  std::vector<int> chosen{0};
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  covered[0] = true;
  int covered_count = 1;
  while (covered_count < n) {
    int best_x = -1;
    int best_gain = -1;
    for (int x = 1; x < n; ++x) {
      if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
      int gain = 0;
      for (int y : chosen) {
        int d1 = x - y;
        if (d1 < 0) d1 += n;
        int d2 = n - d1;
        if (d2 == n) d2 = 0;
        if (!covered[static_cast<std::size_t>(d1)]) ++gain;
        if (d2 != d1 && !covered[static_cast<std::size_t>(d2)]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_x = x;
      }
    }
    for (int y : chosen) {
      int d1 = best_x - y;
      if (d1 < 0) d1 += n;
      int d2 = n - d1;
      if (d2 == n) d2 = 0;
      covered[static_cast<std::size_t>(d1)] = true;
      covered[static_cast<std::size_t>(d2)] = true;
    }
    covered_count = static_cast<int>(std::count(covered.begin(), covered.end(), true));
    chosen.push_back(best_x);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

bool is_difference_cover(const std::vector<int>& residues, int n) {
  check_residues(residues, n);
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (int a : residues) {
    for (int b : residues) {
      int d = a - b;
      if (d < 0) d += n;
      covered[static_cast<std::size_t>(d)] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool v) { return v; });
}

CoverSearchResult min_difference_cover(int n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("min_difference_cover: need n >= 1");
  CoverSearchResult out;
  out.n = n;
  if (n == 1) {
    out.size = 1;
    out.witness = {0};
    out.exhaustive = true;
    return out;
  }
  for (int target = counting_lower_bound(n); target <= n; ++target) {
    CoverStratumSearch stratum(n, target, budget, out.nodes);
    auto witness = stratum.run();
    if (stratum.exhausted()) {
      out.witness = greedy_cover(n);
      out.size = static_cast<int>(out.witness.size());
      out.exhaustive = false;
      return out;
    }
    if (!witness.empty()) {
      out.witness = std::move(witness);
      out.size = target;
      out.exhaustive = true;
      return out;
    }
  }
  // Unreachable: {0, 1, ..., n-1} always covers.
  throw std::logic_error("min_difference_cover: no cover found");
}

bool is_sidon_set(const std::vector<int>& residues, int n) {
  check_residues(residues, n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int a : residues) {
    for (int b : residues) {
      if (a == b) continue;
      int d = a - b;
      if (d < 0) d += n;
      if (seen[static_cast<std::size_t>(d)]) return false;
      seen[static_cast<std::size_t>(d)] = true;
    }
  }
  return true;
}

namespace {

class SidonSearch {
 public:
  SidonSearch(int n, std::uint64_t budget) : n_(n), budget_(budget) {
    // k(k-1) <= n-1 caps any Sidon set size.
    cap_ = 1;
    while (static_cast<long>(cap_ + 1) * cap_ <= n - 1) ++cap_;
  }

  SidonSearchResult run() {
    SidonSearchResult out;
    out.n = n_;
    if (n_ == 1) {
      out.size = 1;
      out.witness = {0};
      out.exhaustive = true;
      out.nodes = 0;
      return out;
    }
    chosen_ = {0};
    diff_used_.assign(static_cast<std::size_t>(n_), false);
    best_ = {0};
    descend();
    out.size = static_cast<int>(best_.size());
    out.witness = best_;
    out.exhaustive = !exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void descend() {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (static_cast<int>(chosen_.size()) == cap_ || exhausted_) return;
    for (int x = chosen_.back() + 1; x < n_; ++x) {
      if (static_cast<int>(chosen_.size()) + (n_ - x) <= static_cast<int>(best_.size())) break;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return;
      }
      std::vector<int> fresh;
      bool ok = true;
      for (int y : chosen_) {
        const int d1 = x - y;
        const int d2 = n_ - d1;
        if (diff_used_[static_cast<std::size_t>(d1)] ||
            (d2 < n_ && diff_used_[static_cast<std::size_t>(d2)]) || d1 == d2) {
          ok = false;
        }
        if (!ok) break;
        diff_used_[static_cast<std::size_t>(d1)] = true;
        fresh.push_back(d1);
        if (d2 < n_) {
          diff_used_[static_cast<std::size_t>(d2)] = true;
          fresh.push_back(d2);
        }
      }
      if (ok) {
        chosen_.push_back(x);
        descend();
        chosen_.pop_back();
      }
      for (int d : fresh) diff_used_[static_cast<std::size_t>(d)] = false;
      if (exhausted_) return;
    }
  }

  int n_;
  std::uint64_t budget_;
  int cap_ = 1;
  std::vector<int> chosen_;
  std::vector<bool> diff_used_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Cheap certified upper bounds, recursively closed under multiplication of
// the ground-set factorization. No searching here.
int cheap_g_upper(int n, std::map<int, int>& memo, std::string* provenance) {
  auto it = memo.find(n);
  if (it != memo.end() && provenance == nullptr) return it->second;
  int best = n;  // the whole line always works: k = n gives the single full set
  std::string how = "full-set";
  for (int k = 1; k <= n; ++k) {
    if (run_family_nonempty(n, k)) {
      if (k < best) {
        best = k;
        how = "run-dominant-family";
      }
      break;
    }
  }
  // Flat families: n = (q^(2r+1)-1)/(q-1) with k = (q^(r+1)-1)/(q-1), and the
  // dual affine shape n = q(q^(2r)-1)/(q-1) with the same k.
  for (int q = 2; q <= n; ++q) {
    const auto fs = distinct_prime_factors(static_cast<std::uint64_t>(q));
    if (fs.size() != 1) continue;
    for (int r = 1;; ++r) {
      mpz_class qa = int_pow(q, static_cast<unsigned long>(2 * r + 1));
      mpz_class pg_n = (qa - 1) / (q - 1);
      mpz_class da_n = mpz_class(q) * ((int_pow(q, static_cast<unsigned long>(2 * r)) - 1) / (q - 1));
      mpz_class kk = (int_pow(q, static_cast<unsigned long>(r + 1)) - 1) / (q - 1);
      if (pg_n > n && da_n > n) break;
      if (pg_n == n && kk < best) {
        best = static_cast<int>(kk.get_si());
        how = "projective-flats(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")";
      }
      if (da_n == n && kk < best) {
        best = static_cast<int>(kk.get_si());
        how = "dual-affine-flats(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")";
      }
    }
  }
  for (int a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    const int b = n / a;
    const int prod = cheap_g_upper(a, memo, nullptr) * cheap_g_upper(b, memo, nullptr);
    if (prod < best) {
      best = prod;
      how = "product(" + std::to_string(a) + "x" + std::to_string(b) + ")";
    }
  }
  memo[n] = best;
  if (provenance != nullptr) *provenance = how;
  return best;
}

}  // namespace

SidonSearchResult max_sidon_set(int n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("max_sidon_set: need n >= 1");
  SidonSearch search(n, budget);
  return search.run();
}

GBoundsReport g_bounds(int n, std::uint64_t cover_budget) {
  if (n < 1) throw std::invalid_argument("g_bounds: need n >= 1");
  GBoundsReport out;
  out.n = n;
  if (n == 1) {
    out.lower = 1;
    out.lower_provenance = "trivial";
    out.upper = 1;
    out.upper_provenance = "single-point";
    out.exact = true;
    out.upper_candidates = {{"single-point", 1}};
    return out;
  }
  out.lower = static_cast<int>(integer_sqrt(static_cast<std::uint64_t>(n))) + 1;
  out.lower_provenance = "averaging";

  std::map<int, int> memo;
  std::string cheap_how;
  const int cheap = cheap_g_upper(n, memo, &cheap_how);
  out.upper_candidates.emplace_back(cheap_how, cheap);

  const auto cover = min_difference_cover(n, cover_budget);
  const std::string cover_tag =
      cover.exhaustive ? "difference-cover" : "difference-cover(non-exhaustive)";
  out.upper_candidates.emplace_back(cover_tag, cover.size);

  if (cover.size <= cheap) {
    out.upper = cover.size;
    out.upper_provenance = cover_tag;
  } else {
    out.upper = cheap;
    out.upper_provenance = cheap_how;
  }

  if (is_prime(static_cast<std::uint64_t>(n)) && cover.exhaustive &&
      cover.size > out.lower) {
    // For prime n the minimum cover size is attained by the least valid k.
    out.lower = cover.size;
    out.lower_provenance = "difference-cover-minimum(prime)";
  }
  out.exact = out.lower == out.upper;
  return out;
}

}  // namespace symfam
