#pragma once

// Exhaustive enumeration of Gr(k,n)(F_q). Every k-dimensional row space gets
// exactly one representative: its reduced row echelon form, iterated cell by
// cell over the pivot sets in lexicographic order. Points are stored flat
// (matrix entries and Plucker coordinates in contiguous arrays).
//
// enumerate_grassmannian is the OpenMP kernel; enumerate_grassmannian_serial is
// the reference it is tested against. Both produce identical point orders.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

#include "rvar/field.hpp"
#include "rvar/matrix.hpp"
#include "rvar/plucker.hpp"

namespace rvar {

inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000;

/// [n choose k]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

class PointSet {
 public:
  PointSet(int k, int n, PrimeField field);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.characteristic(); }
  std::size_t size() const noexcept { return size_; }
  std::size_t coordinate_count() const noexcept { return coords_; }

  /// Row-major reduced echelon form of point i.
  std::span<const std::uint32_t> echelon(std::size_t i) const {
    return {matrices_.data() + i * k_ * n_, static_cast<std::size_t>(k_ * n_)};
  }
  /// Plucker coordinates of point i in lexicographic order of the column sets.
  std::span<const std::uint32_t> plucker(std::size_t i) const { return {pluckers_.data() + i * coords_, coords_}; }

  Matrix<PrimeField> matrix(std::size_t i) const;
  PluckerVector<PrimeField> plucker_vector(std::size_t i) const;

 private:
  friend PointSet enumerate_grassmannian(int, int, std::uint32_t, std::uint64_t);
  friend PointSet enumerate_grassmannian_serial(int, int, std::uint32_t, std::uint64_t);
  void resize(std::size_t count);
  std::uint32_t* echelon_data(std::size_t i) { return matrices_.data() + i * k_ * n_; }
  std::uint32_t* plucker_data(std::size_t i) { return pluckers_.data() + i * coords_; }

  int k_;
  int n_;
  PrimeField field_;
  std::size_t coords_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> matrices_;
  std::vector<std::uint32_t> pluckers_;
};

/// Throws BudgetExceeded when [n choose k]_q > budget.
PointSet enumerate_grassmannian(int k, int n, std::uint32_t q, std::uint64_t budget = kDefaultPointBudget);
PointSet enumerate_grassmannian_serial(int k, int n, std::uint32_t q, std::uint64_t budget = kDefaultPointBudget);

/// Shares enumerated point sets between verifications. Thread-safe.
class PointCache {
 public:
  explicit PointCache(std::uint64_t budget = kDefaultPointBudget) : budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }
  std::shared_ptr<const PointSet> get(int k, int n, std::uint32_t q);

 private:
  std::uint64_t budget_;
  std::mutex mutex_;
  std::map<std::tuple<int, int, std::uint32_t>, std::shared_ptr<const PointSet>> sets_;
};

}  // namespace rvar
