#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rvar/matrix.hpp"
#include "rvar/relation.hpp"
#include "rvar/subset.hpp"

namespace rvar {

/// A value for every alpha in S(k,n), stored in lexicographic order of alpha.
template <ExactField F>
class PluckerVector {
 public:
  using value_type = typename F::value_type;

  PluckerVector(F field, int k, int n)
      : field_(std::move(field)), k_(k), n_(n), values_(binomial(n, k), field_.zero()) {}
  PluckerVector(F field, int k, int n, std::vector<value_type> values)
      : field_(std::move(field)), k_(k), n_(n), values_(std::move(values)) {
    if (values_.size() != binomial(n, k)) throw InvalidParameters("Plucker vector has the wrong length");
  }

  const F& field() const noexcept { return field_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }

  const value_type& operator[](const KSubset& a) const { return values_[index_of(a)]; }
  value_type& operator[](const KSubset& a) { return values_[index_of(a)]; }
  std::span<const value_type> values() const noexcept { return values_; }

  bool is_zero() const {
    for (const auto& v : values_) {
      if (!field_.is_zero(v)) return false;
    }
    return true;
  }

  friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
    if (a.k_ != b.k_ || a.n_ != b.n_ || !(a.field_ == b.field_)) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
      if (!a.field_.equal(a.values_[i], b.values_[i])) return false;
    }
    return true;
  }

 private:
  std::size_t index_of(const KSubset& a) const {
    if (a.k() != k_ || a.n() != n_) throw InvalidParameters(a.to_string() + " is not a coordinate of this vector");
    return lex_index(a);
  }

  F field_;
  int k_;
  int n_;
  std::vector<value_type> values_;
};

/// Delta_alpha = det M_alpha for every alpha.
template <ExactField F>
PluckerVector<F> maximal_minors(const Matrix<F>& m) {
  const int k = m.rows();
  const int n = m.cols();
  if (k < 1 || k > n) throw InvalidParameters("maximal_minors needs 1 <= k <= n");
  const auto& subsets = enumerate_subsets(k, n);
  std::vector<typename F::value_type> values;
  values.reserve(subsets.size());
  for (const auto& a : subsets) values.push_back(determinant(m.columns(a)));
  return PluckerVector<F>(m.field(), k, n, std::move(values));
}

/// Value of Delta_a Delta_b - sum sign Delta_left Delta_right at `p`.
template <ExactField F>
typename F::value_type evaluate_relation(const PluckerRelation& rel, const PluckerVector<F>& p) {
  const F& f = p.field();
  auto total = f.mul(p[rel.a], p[rel.b]);
  for (const auto& term : rel.terms) {
    const auto product = f.mul(p[term.left], p[term.right]);
    total = term.sign > 0 ? f.sub(total, product) : f.add(total, product);
  }
  return total;
}

/// The first relation of S(k,n) that `p` violates, if any.
template <ExactField F>
std::optional<PluckerRelation> find_violated_relation(const PluckerVector<F>& p) {
  for (const auto& rel : all_plucker_relations(p.k(), p.n())) {
    if (!p.field().is_zero(evaluate_relation(rel, p))) return rel;
  }
  return std::nullopt;
}

template <ExactField F>
bool verify_plucker_relations(const PluckerVector<F>& p) {
  return !find_violated_relation(p).has_value();
}

}  // namespace rvar
