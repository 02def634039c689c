#pragma once

// Subvarieties of Gr(k,n) cut out by vanishing and nonvanishing of Plucker
// coordinates, tested point by point on the enumerated F_q points.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rvar/grassmannian.hpp"
#include "rvar/subset.hpp"

namespace rvar {

/// Points where every coordinate in `must_vanish` is zero and every coordinate
/// in `must_not_vanish` is nonzero. The two families are disjoint.
class VarietySpec {
 public:
  VarietySpec(SubsetFamily must_vanish, SubsetFamily must_not_vanish, std::string name = {});

  int k() const noexcept { return must_vanish_.k(); }
  int n() const noexcept { return must_vanish_.n(); }
  const SubsetFamily& must_vanish() const noexcept { return must_vanish_; }
  const SubsetFamily& must_not_vanish() const noexcept { return must_not_vanish_; }
  const std::string& name() const noexcept { return name_; }

  /// Plucker-vector membership.
  bool contains(std::span<const std::uint32_t> plucker) const;

 private:
  SubsetFamily must_vanish_;
  SubsetFamily must_not_vanish_;
  std::string name_;
  std::vector<std::size_t> vanish_index_;
  std::vector<std::size_t> nonvanish_index_;
};

/// No constraints: the whole Grassmannian.
VarietySpec grassmannian_spec(int k, int n);
/// X_beta^gamma; with `open`, additionally Delta_beta, Delta_gamma != 0.
VarietySpec richardson_spec(const KSubset& beta, const KSubset& gamma, bool open);
/// X_M: Delta_alpha = 0 for alpha outside M.
VarietySpec positroid_spec(const SubsetFamily& family);
/// W_beta^gamma: X_beta^gamma with Delta_{delta_0}, ..., Delta_{delta_k} != 0.
VarietySpec w_spec(const KSubset& beta, const KSubset& gamma);
/// Open Richardson variety with Delta_{delta_t} = 0 added.
VarietySpec divisor_spec(const KSubset& beta, const KSubset& gamma, int t);
/// Both sets of constraints. Throws InvalidParameters when they conflict.
VarietySpec intersect(const VarietySpec& a, const VarietySpec& b);

bool membership(const PointSet& points, std::size_t index, const VarietySpec& spec);

/// Indices of the points in `spec`, ascending. OpenMP kernel.
std::vector<std::size_t> filter_points(const PointSet& points, const VarietySpec& spec);
/// Serial reference for filter_points.
std::vector<std::size_t> filter_points_serial(const PointSet& points, const VarietySpec& spec);

/// OpenMP reduction over the points.
std::uint64_t count_points(const PointSet& points, const VarietySpec& spec);
std::uint64_t count_points_serial(const PointSet& points, const VarietySpec& spec);
/// Enumerates Gr(k,n)(F_q) through the cache and counts.
std::uint64_t count_points(const VarietySpec& spec, std::uint32_t q, PointCache& cache);

/// The first point (index) in exactly one of the two varieties, if any.
std::optional<std::size_t> first_difference(const PointSet& points, const VarietySpec& a, const VarietySpec& b);

/// For each point, the (beta, gamma) of the unique open Richardson variety containing
/// it: the componentwise minimum and maximum of its nonzero coordinates.
struct RichardsonCell {
  KSubset beta;
  KSubset gamma;
};
RichardsonCell richardson_cell(const PointSet& points, std::size_t index);

/// "F_q point #i [[..],[..]]" with the echelon rows.
std::string describe_point(const PointSet& points, std::size_t index);

}  // namespace rvar
