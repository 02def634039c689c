#include "rvar/grassmannian.hpp"

#include <algorithm>
#include <vector>
#include <limits>

#include "rvar/errors.hpp"
#include "rvar/subset.hpp"

namespace rvar {

namespace {

// Pivot-set cells with their free positions and global offsets.
struct CellTable {
  struct Cell {
    KSubset pivots;
    std::vector<int> free;  // row-major positions r * n + c
    std::uint64_t count;
  };
  std::vector<Cell> cells;
  std::vector<std::uint64_t> offsets;  // cells.size() + 1 entries
};

CellTable make_cells(int k, int n, std::uint32_t q) {
  CellTable table;
  std::uint64_t total = 0;
  for (const auto& pivots : enumerate_subsets(k, n)) {
    CellTable::Cell cell{pivots, {}, 1};
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[r] + 1; c <= n; ++c) {
        if (!pivots.contains(c)) cell.free.push_back(r * n + (c - 1));
      }
    }
    for (std::size_t f = 0; f < cell.free.size(); ++f) cell.count *= q;
    table.offsets.push_back(total);
    total += cell.count;
    table.cells.push_back(std::move(cell));
  }
  table.offsets.push_back(total);
  return table;
}

std::uint32_t det_mod(std::vector<std::uint32_t>& work, int k, const PrimeField& f) {
  std::uint32_t det = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = c;
    while (pivot < k && work[pivot * k + c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      for (int j = 0; j < k; ++j) std::swap(work[pivot * k + j], work[c * k + j]);
      det = f.neg(det);
    }
    det = f.mul(det, work[c * k + c]);
    const std::uint32_t inv = f.inv(work[c * k + c]);
    for (int r = c + 1; r < k; ++r) {
      if (work[r * k + c] == 0) continue;
      const std::uint32_t factor = f.mul(work[r * k + c], inv);
      for (int j = c; j < k; ++j) work[r * k + j] = f.sub(work[r * k + j], f.mul(factor, work[c * k + j]));
    }
  }
  return det;
}

// Writes point `local` of `cell` (echelon form and Plucker vector).
void fill_point(const CellTable::Cell& cell, std::uint64_t local, int k, int n, const PrimeField& f,
                std::uint32_t* echelon, std::uint32_t* plucker, std::vector<std::uint32_t>& work) {
  const std::uint32_t q = f.characteristic();
  std::fill(echelon, echelon + k * n, 0u);
  for (int r = 0; r < k; ++r) echelon[r * n + cell.pivots[r] - 1] = 1;
  for (int pos : cell.free) {
    echelon[pos] = static_cast<std::uint32_t>(local % q);
    local /= q;
  }
  const auto& subsets = enumerate_subsets(k, n);
  work.resize(static_cast<std::size_t>(k) * k);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const KSubset& cols = subsets[s];
    for (int r = 0; r < k; ++r) {
      for (int j = 0; j < k; ++j) work[r * k + j] = echelon[r * n + cols[j] - 1];
    }
    plucker[s] = det_mod(work, k, f);
  }
}

std::uint64_t checked_size(int k, int n, std::uint32_t q, std::uint64_t budget) {
  if (k < 1 || k > n) throw InvalidParameters("Gr(k,n) needs 1 <= k <= n");
  const std::uint64_t count = gaussian_binomial(n, k, q);
  if (count > budget) {
    throw BudgetExceeded("Gr(" + std::to_string(k) + "," + std::to_string(n) + ")(F_" + std::to_string(q) +
                         ") has " + (count == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                                       : std::to_string(count)) +
                         " points, budget is " + std::to_string(budget));
  }
  return count;
}

}  // namespace

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return a != 0 && b > kMax / a ? kMax : a * b; };
  const auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j], all terms nonnegative so saturation is monotone.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (int e = 0; e < j; ++e) qj = sat_mul(qj, q);
      row[j] = sat_add(row[j - 1], sat_mul(qj, row[j]));
    }
  }
  return row[k];
}

PointSet::PointSet(int k, int n, PrimeField field)
    : k_(k), n_(n), field_(field), coords_(binomial(n, k)) {}

void PointSet::resize(std::size_t count) {
  size_ = count;
  matrices_.assign(count * k_ * n_, 0);
  pluckers_.assign(count * coords_, 0);
}

Matrix<PrimeField> PointSet::matrix(std::size_t i) const {
  Matrix<PrimeField> m(field_, k_, n_);
  const auto data = echelon(i);
  for (int r = 0; r < k_; ++r) {
    for (int c = 0; c < n_; ++c) m(r, c) = data[r * n_ + c];
  }
  return m;
}

PluckerVector<PrimeField> PointSet::plucker_vector(std::size_t i) const {
  const auto data = plucker(i);
  return PluckerVector<PrimeField>(field_, k_, n_, std::vector<std::uint32_t>(data.begin(), data.end()));
}

PointSet enumerate_grassmannian_serial(int k, int n, std::uint32_t q, std::uint64_t budget) {
  const PrimeField field(q);
  const std::uint64_t count = checked_size(k, n, q, budget);
  const CellTable table = make_cells(k, n, q);
  PointSet points(k, n, field);
  points.resize(count);
  std::vector<std::uint32_t> work;
  std::size_t index = 0;
  for (const auto& cell : table.cells) {
    for (std::uint64_t local = 0; local < cell.count; ++local, ++index) {
      fill_point(cell, local, k, n, field, points.echelon_data(index), points.plucker_data(index), work);
    }
  }
  return points;
}

PointSet enumerate_grassmannian(int k, int n, std::uint32_t q, std::uint64_t budget) {
  const PrimeField field(q);
  const std::uint64_t count = checked_size(k, n, q, budget);
  const CellTable table = make_cells(k, n, q);
  PointSet points(k, n, field);
  points.resize(count);
  enumerate_subsets(k, n);  // populate the cache before entering the parallel region
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::vector<std::uint32_t> work;
#pragma omp for schedule(static)
    for (std::int64_t g = 0; g < total; ++g) {
      const auto global = static_cast<std::uint64_t>(g);
      const auto it = std::upper_bound(table.offsets.begin(), table.offsets.end(), global);
      const std::size_t cell = static_cast<std::size_t>(it - table.offsets.begin()) - 1;
      fill_point(table.cells[cell], global - table.offsets[cell], k, n, field, points.echelon_data(global),
                 points.plucker_data(global), work);
    }
  }
  return points;
}

std::shared_ptr<const PointSet> PointCache::get(int k, int n, std::uint32_t q) {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(k, n, q);
  if (auto it = sets_.find(key); it != sets_.end()) return it->second;
  auto set = std::make_shared<const PointSet>(enumerate_grassmannian(k, n, q, budget_));
  sets_.emplace(key, set);
  return set;
}

}  // namespace rvar
