#include "rvar/variety.hpp"

#include <algorithm>

#include "rvar/errors.hpp"

namespace rvar {

VarietySpec::VarietySpec(SubsetFamily must_vanish, SubsetFamily must_not_vanish, std::string name)
    : must_vanish_(std::move(must_vanish)), must_not_vanish_(std::move(must_not_vanish)), name_(std::move(name)) {
  if (must_vanish_.k() != must_not_vanish_.k() || must_vanish_.n() != must_not_vanish_.n()) {
    throw InvalidParameters("variety constraints live in different S(k,n)");
  }
  for (const auto& a : must_vanish_) {
    if (must_not_vanish_.contains(a)) {
      throw InvalidParameters("coordinate " + a.to_string() + " must both vanish and not vanish");
    }
    vanish_index_.push_back(lex_index(a));
  }
  for (const auto& a : must_not_vanish_) nonvanish_index_.push_back(lex_index(a));
}

bool VarietySpec::contains(std::span<const std::uint32_t> plucker) const {
  for (std::size_t i : nonvanish_index_) {
    if (plucker[i] == 0) return false;
  }
  for (std::size_t i : vanish_index_) {
    if (plucker[i] != 0) return false;
  }
  return true;
}

VarietySpec grassmannian_spec(int k, int n) {
  return VarietySpec(SubsetFamily(k, n), SubsetFamily(k, n), "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
}

VarietySpec richardson_spec(const KSubset& beta, const KSubset& gamma, bool open) {
  SubsetFamily nonvanish(beta.k(), beta.n());
  if (open) {
    nonvanish.insert(beta);
    nonvanish.insert(gamma);
  }
  return VarietySpec(interval(beta, gamma).complement(), std::move(nonvanish),
                     std::string(open ? "open " : "") + "Richardson[" + beta.to_string() + "," + gamma.to_string() + "]");
}

VarietySpec positroid_spec(const SubsetFamily& family) {
  return VarietySpec(family.complement(), SubsetFamily(family.k(), family.n()), "X_M");
}

VarietySpec w_spec(const KSubset& beta, const KSubset& gamma) {
  SubsetFamily nonvanish(beta.k(), beta.n());
  for (int t = 0; t <= beta.k(); ++t) nonvanish.insert(delta(beta, gamma, t));
  return VarietySpec(interval(beta, gamma).complement(), std::move(nonvanish),
                     "W[" + beta.to_string() + "," + gamma.to_string() + "]");
}

VarietySpec divisor_spec(const KSubset& beta, const KSubset& gamma, int t) {
  const VarietySpec open = richardson_spec(beta, gamma, true);
  SubsetFamily vanish = open.must_vanish();
  vanish.insert(delta(beta, gamma, t));
  return VarietySpec(std::move(vanish), open.must_not_vanish(), "divisor t=" + std::to_string(t));
}

VarietySpec intersect(const VarietySpec& a, const VarietySpec& b) {
  return VarietySpec(a.must_vanish().unite(b.must_vanish()), a.must_not_vanish().unite(b.must_not_vanish()),
                     a.name() + " & " + b.name());
}

namespace {

void check_points(const PointSet& points, const VarietySpec& spec) {
  if (points.k() != spec.k() || points.n() != spec.n()) {
    throw InvalidParameters("variety and point set live in different Grassmannians");
  }
}

}  // namespace

bool membership(const PointSet& points, std::size_t index, const VarietySpec& spec) {
  check_points(points, spec);
  return spec.contains(points.plucker(index));
}

std::vector<std::size_t> filter_points_serial(const PointSet& points, const VarietySpec& spec) {
  check_points(points, spec);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (spec.contains(points.plucker(i))) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> filter_points(const PointSet& points, const VarietySpec& spec) {
  check_points(points, spec);
  const auto total = static_cast<std::int64_t>(points.size());
  std::vector<char> hit(points.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    hit[i] = spec.contains(points.plucker(static_cast<std::size_t>(i))) ? 1 : 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t count_points_serial(const PointSet& points, const VarietySpec& spec) {
  return filter_points_serial(points, spec).size();
}

std::uint64_t count_points(const PointSet& points, const VarietySpec& spec) {
  check_points(points, spec);
  const auto total = static_cast<std::int64_t>(points.size());
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t i = 0; i < total; ++i) {
    if (spec.contains(points.plucker(static_cast<std::size_t>(i)))) ++count;
  }
  return count;
}

std::uint64_t count_points(const VarietySpec& spec, std::uint32_t q, PointCache& cache) {
  return count_points(*cache.get(spec.k(), spec.n(), q), spec);
}

std::optional<std::size_t> first_difference(const PointSet& points, const VarietySpec& a, const VarietySpec& b) {
  check_points(points, a);
  check_points(points, b);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (a.contains(points.plucker(i)) != b.contains(points.plucker(i))) return i;
  }
  return std::nullopt;
}

RichardsonCell richardson_cell(const PointSet& points, std::size_t index) {
  const int k = points.k();
  const int n = points.n();
  const auto& subsets = enumerate_subsets(k, n);
  const auto p = points.plucker(index);
  std::vector<int> lo(k, n + 1), hi(k, 0);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    if (p[s] == 0) continue;
    for (int i = 0; i < k; ++i) {
      lo[i] = std::min(lo[i], subsets[s][i]);
      hi[i] = std::max(hi[i], subsets[s][i]);
    }
  }
  const KSubset beta(lo, n);
  const KSubset gamma(hi, n);
  if (p[lex_index(beta)] == 0 || p[lex_index(gamma)] == 0) {
    throw InternalError("support of point " + std::to_string(index) + " has no Gale-extreme bases");
  }
  return {beta, gamma};
}

std::string describe_point(const PointSet& points, std::size_t index) {
  const auto data = points.echelon(index);
  std::string out = "F_" + std::to_string(points.q()) + " point #" + std::to_string(index) + " [";
  for (int r = 0; r < points.k(); ++r) {
    out += r == 0 ? "[" : ",[";
    for (int c = 0; c < points.n(); ++c) {
      if (c > 0) out += ",";
      out += std::to_string(data[r * points.n() + c]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace rvar
