#include "symfam/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "symfam/errors.hpp"
#include "symfam/numeric.hpp"

namespace symfam {

namespace {

constexpr long kFlatInventoryCap = 2'000'000;
constexpr std::uint64_t kWitnessCheckCap = 200'000'000;

using Matrix = std::vector<std::vector<int>>;

std::vector<int> scaled_to_canonical(const GaloisField& f, std::vector<int> v) {
  int last = -1;
  for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j) {
    if (v[j] != 0) {
      last = j;
      break;
    }
  }
  if (last < 0) throw std::logic_error("zero vector has no projective representative");
  const int s = f.inv(v[last]);
  for (int& coord : v) coord = f.mul(s, coord);
  return v;
}

// All reduced-echelon bases with `rows` pivots among `cols` columns, emitted
// in ascending (pivot pattern, free digits) order.
template <typename Emit>
void for_each_rref(const GaloisField& f, int rows, int cols, Emit&& emit) {
  if (rows == 0) {
    Matrix empty;
    emit(empty);
    return;
  }
  const int q = f.order();
  std::vector<int> pivots(rows);
  std::iota(pivots.begin(), pivots.end(), 0);
  for (;;) {
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < rows; ++i) {
      for (int j = pivots[i] + 1; j < cols; ++j) {
        if (!is_pivot[j]) free_cells.emplace_back(i, j);
      }
    }
    std::uint64_t count = 1;
    for (std::size_t c = 0; c < free_cells.size(); ++c) count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Matrix basis(rows, std::vector<int>(cols, 0));
      for (int i = 0; i < rows; ++i) basis[i][pivots[i]] = 1;
      std::uint64_t rest = idx;
      for (const auto& [i, j] : free_cells) {
        basis[i][j] = static_cast<int>(rest % q);
        rest /= q;
      }
      emit(basis);
    }
    int bump = rows - 1;
    while (bump >= 0 && pivots[bump] == cols - rows + bump) --bump;
    if (bump < 0) break;
    ++pivots[bump];
    for (int i = bump + 1; i < rows; ++i) pivots[i] = pivots[i - 1] + 1;
  }
}

std::vector<int> pivot_columns(const Matrix& basis) {
  std::vector<int> pivots;
  pivots.reserve(basis.size());
  for (const auto& row : basis) {
    const auto it = std::find_if(row.begin(), row.end(), [](int v) { return v != 0; });
    pivots.push_back(static_cast<int>(it - row.begin()));
  }
  return pivots;
}

// Basis of {v : B v = 0} for a reduced-echelon B over f.
Matrix kernel_basis(const GaloisField& f, const Matrix& basis, int cols) {
  const std::vector<int> pivots = pivot_columns(basis);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix kernel;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<int> v(cols, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) v[pivots[i]] = f.neg(basis[i][j]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Matrix invert_matrix(const GaloisField& f, Matrix m) {
  const int d = static_cast<int>(m.size());
  Matrix inv(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) inv[i][i] = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("matrix is singular");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    const int scale = f.inv(m[col][col]);
    for (int j = 0; j < d; ++j) {
      m[col][j] = f.mul(scale, m[col][j]);
      inv[col][j] = f.mul(scale, inv[col][j]);
    }
    for (int row = 0; row < d; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const int factor = m[row][col];
      for (int j = 0; j < d; ++j) {
        m[row][j] = f.sub(m[row][j], f.mul(factor, m[col][j]));
        inv[row][j] = f.sub(inv[row][j], f.mul(factor, inv[col][j]));
      }
    }
  }
  return inv;
}

// Companion matrix of a monic polynomial: columns are the images of the
// basis vectors under multiplication by x.
Matrix companion_matrix(const GaloisField& f, const gfpoly::Poly& monic) {
  const int d = static_cast<int>(monic.size()) - 1;
  Matrix m(d, std::vector<int>(d, 0));
  for (int j = 0; j + 1 < d; ++j) m[j + 1][j] = 1;
  for (int i = 0; i < d; ++i) m[i][d - 1] = f.neg(monic[i]);
  return m;
}

GaloisField build_field(int q) {
  const PrimePower pp = factor_prime_power(q);
  return GaloisField(pp.p, pp.m);
}

}  // namespace

mpz_class gaussian_binomial(int a, int b, int q) {
  if (b < 0 || b > a || q < 2) throw std::invalid_argument("gaussian binomial out of range");
  mpz_class numerator = 1;
  mpz_class denominator = 1;
  mpz_class base = q;
  for (int i = 0; i < b; ++i) {
    mpz_class top;
    mpz_pow_ui(top.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(a - i));
    mpz_class bottom;
    mpz_pow_ui(bottom.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i + 1));
    numerator *= top - 1;
    denominator *= bottom - 1;
  }
  mpz_class result;
  mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return result;
}

PrimePower factor_prime_power(int q) {
  if (q < 2) throw std::invalid_argument("prime power must be at least 2");
  int p = q;
  for (int d = 2; static_cast<long>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw std::invalid_argument("not a prime power");
  return {p, m};
}

IncidenceSpace::IncidenceSpace(SpaceKind kind, int dimension, int q)
    : kind_(kind), dimension_(dimension), field_(build_field(q)) {
  if (dimension < 1) throw std::invalid_argument("space dimension must be positive");
  const auto check_cap = [](long count) {
    if (count > SubsetMask::kMaxGroundSet) throw capacity_error("point count exceeds mask capacity");
  };
  const auto projective_reps = [&](int coords) {
    std::vector<std::vector<int>> reps;
    long expected = 0;
    long power = 1;
    for (int t = 0; t < coords; ++t) {
      expected += power;
      check_cap(expected);
      power *= q;
    }
    reps.reserve(static_cast<std::size_t>(expected));
    for (int t = 0; t < coords; ++t) {
      long count = 1;
      for (int j = 0; j < t; ++j) count *= q;
      for (long idx = 0; idx < count; ++idx) {
        std::vector<int> v(coords, 0);
        long rest = idx;
        for (int j = 0; j < t; ++j) {
          v[j] = static_cast<int>(rest % q);
          rest /= q;
        }
        v[t] = 1;
        reps.push_back(std::move(v));
      }
    }
    return reps;
  };

  switch (kind) {
    case SpaceKind::projective: {
      points_ = projective_reps(dimension + 1);
      break;
    }
    case SpaceKind::affine: {
      long count = 1;
      for (int j = 0; j < dimension; ++j) {
        count *= q;
        check_cap(count);
      }
      points_.reserve(static_cast<std::size_t>(count));
      for (long idx = 0; idx < count; ++idx) {
        std::vector<int> v(dimension, 0);
        long rest = idx;
        for (int j = 0; j < dimension; ++j) {
          v[j] = static_cast<int>(rest % q);
          rest /= q;
        }
        points_.push_back(std::move(v));
      }
      break;
    }
    case SpaceKind::dual_affine: {
      const auto directions = projective_reps(dimension);
      check_cap(static_cast<long>(directions.size()) * q);
      points_.reserve(directions.size() * static_cast<std::size_t>(q));
      for (const auto& direction : directions) {
        for (int c = 0; c < q; ++c) {
          std::vector<int> enc = direction;
          enc.push_back(c);
          points_.push_back(std::move(enc));
        }
      }
      break;
    }
  }
  std::sort(points_.begin(), points_.end());
}

int IncidenceSpace::label_of(const std::vector<int>& encoding) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), encoding);
  if (it == points_.end() || *it != encoding) throw std::out_of_range("encoding is not a point");
  return static_cast<int>(it - points_.begin()) + 1;
}

std::vector<Flat> IncidenceSpace::flats(int flat_dim) const {
  const int q = field_.order();
  std::vector<Flat> out;
  if (kind_ == SpaceKind::projective) {
    if (flat_dim < 0 || flat_dim > dimension_) throw std::invalid_argument("flat dimension out of range");
    const mpz_class expected = gaussian_binomial(dimension_ + 1, flat_dim + 1, q);
    if (expected > kFlatInventoryCap) throw capacity_error("flat inventory too large");
    out.reserve(expected.get_ui());
    for_each_rref(field_, flat_dim + 1, dimension_ + 1,
                  [&](const Matrix& basis) { out.push_back(Flat{basis, {}}); });
    return out;
  }
  if (flat_dim < 0 || flat_dim > dimension_) throw std::invalid_argument("flat dimension out of range");
  mpz_class expected = gaussian_binomial(dimension_, flat_dim, q);
  for (int j = 0; j < dimension_ - flat_dim; ++j) expected *= q;
  if (expected > kFlatInventoryCap) throw capacity_error("flat inventory too large");
  out.reserve(expected.get_ui());
  for_each_rref(field_, flat_dim, dimension_, [&](const Matrix& basis) {
    const std::vector<int> pivots = pivot_columns(basis);
    std::vector<bool> is_pivot(dimension_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < dimension_; ++j) {
      if (!is_pivot[j]) free_cols.push_back(j);
    }
    std::uint64_t count = 1;
    for (std::size_t c = 0; c < free_cols.size(); ++c) count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<int> offset(dimension_, 0);
      std::uint64_t rest = idx;
      for (int j : free_cols) {
        offset[j] = static_cast<int>(rest % q);
        rest /= q;
      }
      out.push_back(Flat{basis, std::move(offset)});
    }
  });
  return out;
}

SubsetMask IncidenceSpace::labels_of_flat(const Flat& flat) const {
  const int q = field_.order();
  const int rows = static_cast<int>(flat.basis.size());
  SubsetMask mask(point_count());
  const auto for_each_combination = [&](const Matrix& vectors, auto&& handle) {
    std::uint64_t count = 1;
    for (std::size_t c = 0; c < vectors.size(); ++c) count *= static_cast<std::uint64_t>(q);
    const int len = vectors.empty() ? 0 : static_cast<int>(vectors[0].size());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<int> v(len, 0);
      std::uint64_t rest = idx;
      bool nonzero = false;
      for (const auto& row : vectors) {
        const int coeff = static_cast<int>(rest % q);
        rest /= q;
        if (coeff == 0) continue;
        nonzero = true;
        for (int j = 0; j < len; ++j) v[j] = field_.add(v[j], field_.mul(coeff, row[j]));
      }
      handle(std::move(v), nonzero);
    }
  };

  switch (kind_) {
    case SpaceKind::projective: {
      for_each_combination(flat.basis, [&](std::vector<int> v, bool nonzero) {
        if (!nonzero) return;
        mask.set(label_of(scaled_to_canonical(field_, std::move(v))) - 1);
      });
      return mask;
    }
    case SpaceKind::affine: {
      if (static_cast<int>(flat.offset.size()) != dimension_) {
        throw std::invalid_argument("affine flat needs an offset");
      }
      for_each_combination(flat.basis, [&](std::vector<int> v, bool) {
        for (int j = 0; j < dimension_; ++j) v[j] = field_.add(v[j], flat.offset[j]);
        mask.set(label_of(v) - 1);
      });
      return mask;
    }
    case SpaceKind::dual_affine: {
      if (static_cast<int>(flat.offset.size()) != dimension_) {
        throw std::invalid_argument("dual affine members are indexed by affine flats");
      }
      if (rows > 0 && static_cast<int>(flat.basis[0].size()) != dimension_) {
        throw std::invalid_argument("flat lives in the wrong space");
      }
      const Matrix kernel = kernel_basis(field_, flat.basis, dimension_);
      for_each_combination(kernel, [&](std::vector<int> direction, bool nonzero) {
        if (!nonzero) return;
        int constant = 0;
        for (int j = 0; j < dimension_; ++j) {
          constant = field_.add(constant, field_.mul(direction[j], flat.offset[j]));
        }
        int last = -1;
        for (int j = dimension_ - 1; j >= 0; --j) {
          if (direction[j] != 0) {
            last = j;
            break;
          }
        }
        const int s = field_.inv(direction[last]);
        std::vector<int> enc(dimension_ + 1, 0);
        for (int j = 0; j < dimension_; ++j) enc[j] = field_.mul(s, direction[j]);
        enc[dimension_] = field_.mul(s, constant);
        mask.set(label_of(enc) - 1);
      });
      return mask;
    }
  }
  throw std::logic_error("unhandled space kind");
}

SetFamily pg_flat_family(int r, int q) {
  if (r < 1) throw std::invalid_argument("flat dimension parameter must be positive");
  const IncidenceSpace space(SpaceKind::projective, 2 * r, q);
  std::vector<SubsetMask> members;
  for (const Flat& flat : space.flats(r)) members.push_back(space.labels_of_flat(flat));
  return SetFamily(space.point_count(), std::move(members));
}

SetFamily dual_affine_family(int r, int q) {
  if (r < 1) throw std::invalid_argument("flat dimension parameter must be positive");
  const IncidenceSpace space(SpaceKind::dual_affine, 2 * r, q);
  std::vector<SubsetMask> members;
  for (const Flat& flat : space.flats(r - 1)) members.push_back(space.labels_of_flat(flat));
  return SetFamily(space.point_count(), std::move(members));
}

namespace {

Permutation label_permutation(const IncidenceSpace& space,
                              const std::function<std::vector<int>(const std::vector<int>&)>& act) {
  const int n = space.point_count();
  std::vector<int> images0(n);
  for (int i = 0; i < n; ++i) {
    images0[i] = space.label_of(act(space.point_encodings()[i])) - 1;
  }
  return Permutation(std::move(images0));
}

void require_transitive(const GroupWitness& witness) {
  if (orbit_of(witness, 0).count() != witness.n) {
    throw std::logic_error("symmetry generators are not transitive");
  }
}

void require_family_preserved(const GroupWitness& witness, const std::vector<SubsetMask>& members) {
  std::vector<SubsetMask> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  for (const Permutation& generator : witness.generators) {
    for (const SubsetMask& member : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), generator.apply(member))) {
        throw std::logic_error("symmetry generator does not preserve the flat family");
      }
    }
  }
}

}  // namespace

GroupWitness geometry_symmetry_witness(const IncidenceSpace& space) {
  const GaloisField& f = space.field();
  const int d = space.dimension();
  const int q = f.order();

  switch (space.kind()) {
    case SpaceKind::projective: {
      const gfpoly::Poly primitive = gfpoly::first_primitive_polynomial(f, d + 1);
      const Matrix cycle = companion_matrix(f, primitive);
      const Permutation perm = label_permutation(space, [&](const std::vector<int>& v) {
        std::vector<int> image(d + 1, 0);
        for (int i = 0; i <= d; ++i) {
          for (int j = 0; j <= d; ++j) {
            if (cycle[i][j] == 0 || v[j] == 0) continue;
            image[i] = f.add(image[i], f.mul(cycle[i][j], v[j]));
          }
        }
        return scaled_to_canonical(f, std::move(image));
      });
      GroupWitness witness{space.point_count(), {perm}};
      require_transitive(witness);
      if (d >= 2) {
        const mpz_class line_count = gaussian_binomial(d + 1, 2, q);
        const mpz_class cost = line_count * q * q;
        if (cost > kWitnessCheckCap) throw capacity_error("witness verification exceeds internal budget");
        std::vector<SubsetMask> lines;
        for (const Flat& flat : space.flats(1)) lines.push_back(space.labels_of_flat(flat));
        require_family_preserved(witness, lines);
      }
      return witness;
    }
    case SpaceKind::dual_affine: {
      const gfpoly::Poly primitive = gfpoly::first_primitive_polynomial(f, d);
      const Matrix cycle = companion_matrix(f, primitive);
      const Matrix cycle_inv = invert_matrix(f, cycle);

      const Permutation translate = label_permutation(space, [&](const std::vector<int>& enc) {
        std::vector<int> image = enc;
        image[d] = f.add(image[d], image[0]);
        return image;
      });
      const Permutation linear = label_permutation(space, [&](const std::vector<int>& enc) {
        std::vector<int> direction(d, 0);
        for (int j = 0; j < d; ++j) {
          for (int i = 0; i < d; ++i) {
            if (enc[i] == 0 || cycle_inv[i][j] == 0) continue;
            direction[j] = f.add(direction[j], f.mul(enc[i], cycle_inv[i][j]));
          }
        }
        int last = -1;
        for (int j = d - 1; j >= 0; --j) {
          if (direction[j] != 0) {
            last = j;
            break;
          }
        }
        if (last < 0) throw std::logic_error("linear generator collapsed a direction");
        const int s = f.inv(direction[last]);
        std::vector<int> image(d + 1, 0);
        for (int j = 0; j < d; ++j) image[j] = f.mul(s, direction[j]);
        image[d] = f.mul(s, enc[d]);
        return image;
      });

      GroupWitness witness{space.point_count(), {translate, linear}};
      require_transitive(witness);
      if (d % 2 == 0 && d >= 2) {
        const int r = d / 2;
        mpz_class member_count = gaussian_binomial(d, r - 1, q);
        for (int j = 0; j < d - (r - 1); ++j) member_count *= q;
        mpz_class per_member = 1;
        for (int j = 0; j < d - (r - 1); ++j) per_member *= q;
        if (member_count * per_member > kWitnessCheckCap) {
          throw capacity_error("witness verification exceeds internal budget");
        }
        std::vector<SubsetMask> members;
        for (const Flat& flat : space.flats(r - 1)) members.push_back(space.labels_of_flat(flat));
        require_family_preserved(witness, members);
      }
      return witness;
    }
    case SpaceKind::affine:
      throw std::invalid_argument("no canonical symmetry witness for plain affine spaces");
  }
  throw std::logic_error("unhandled space kind");
}

SubsetMask singer_difference_set(int q) {
  const PrimePower pp = factor_prime_power(q);
  const GaloisField field(pp.p, 3 * pp.m);
  const int n = q * q + q + 1;
  const int generator = field.generator();

  std::vector<int> subfield{0};
  for (int j = 0; j < q - 1; ++j) subfield.push_back(field.exp(static_cast<long>(j) * n));
  {
    std::set<int> distinct(subfield.begin(), subfield.end());
    if (static_cast<int>(distinct.size()) != q) throw std::logic_error("subfield extraction failed");
  }

  std::set<int> labels;
  for (int a : subfield) {
    for (int b : subfield) {
      if (a == 0 && b == 0) continue;
      const int v = field.add(a, field.mul(b, generator));
      if (v == 0) throw std::logic_error("line through 1 and the generator is degenerate");
      labels.insert(field.log(v) % n);
    }
  }
  if (static_cast<int>(labels.size()) != q + 1) throw std::logic_error("line label count is wrong");

  std::vector<int> sorted(labels.begin(), labels.end());
  std::vector<int> counts(n, 0);
  for (int x : sorted) {
    for (int y : sorted) {
      if (x != y) ++counts[((x - y) % n + n) % n];
    }
  }
  for (int r = 1; r < n; ++r) {
    if (counts[r] != 1) throw std::logic_error("difference set is not perfect");
  }

  std::vector<int> best;
  for (int t = 0; t < n; ++t) {
    std::vector<int> rotated;
    rotated.reserve(sorted.size());
    for (int x : sorted) rotated.push_back((x + t) % n);
    std::sort(rotated.begin(), rotated.end());
    if (best.empty() || rotated < best) best = std::move(rotated);
  }
  return SubsetMask::from_residues(n, best);
}

bool is_maximal_intersecting(const SetFamily& family, long budget) {
  if (!family.uniformity().has_value()) throw std::invalid_argument("family must be uniform");
  if (!is_intersecting(family)) throw std::invalid_argument("family must be intersecting");
  const int n = family.ground_size();
  const int k = *family.uniformity();
  if (binomial(n, k) > budget) throw budget_error("layer too large to sweep");

  if (n <= 63) {
    std::vector<std::uint64_t> member_bits;
    member_bits.reserve(family.size());
    for (const SubsetMask& m : family.members()) member_bits.push_back(m.low_bits());
    std::sort(member_bits.begin(), member_bits.end());
    if (k == 0) return !family.members().empty();
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t candidate = (std::uint64_t{1} << k) - 1;
    while (candidate < limit) {
      if (!std::binary_search(member_bits.begin(), member_bits.end(), candidate)) {
        bool meets_all = true;
        for (std::uint64_t bits : member_bits) {
          if ((bits & candidate) == 0) {
            meets_all = false;
            break;
          }
        }
        if (meets_all) return false;
      }
      const std::uint64_t low = candidate & (~candidate + 1);
      const std::uint64_t ripple = candidate + low;
      if (ripple >= limit || ripple < candidate) break;
      candidate = ripple | (((candidate ^ ripple) >> 2) / low);
    }
    return true;
  }

  std::vector<int> positions(k);
  std::iota(positions.begin(), positions.end(), 0);
  for (;;) {
    SubsetMask candidate(n);
    for (int pos : positions) candidate.set(pos);
    if (!family.contains(candidate)) {
      bool meets_all = true;
      for (const SubsetMask& m : family.members()) {
        if (!m.intersects(candidate)) {
          meets_all = false;
          break;
        }
      }
      if (meets_all) return false;
    }
    int bump = k - 1;
    while (bump >= 0 && positions[bump] == n - k + bump) --bump;
    if (bump < 0) break;
    ++positions[bump];
    for (int i = bump + 1; i < k; ++i) positions[i] = positions[i - 1] + 1;
  }
  return true;
}

}  // namespace symfam
