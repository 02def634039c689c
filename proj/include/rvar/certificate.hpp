#pragma once

// Certificates that a Plucker coordinate Delta_alpha, alpha in [beta, gamma]
// avoiding [beta(t+1), gamma(t)], lies in the principal ideal <Delta_{delta_t}>
// of the open Richardson coordinate ring (with Delta_beta, Delta_gamma inverted).
//
// A certificate carries a cofactor e with Delta_alpha = Delta_{delta_t} * e on every
// point of the open Richardson variety. Cofactors are built by induction on the
// order <=_t: rewrite Delta_alpha with a Plucker relation against beta (or gamma),
// divide by Delta_beta (or Delta_gamma), and drop every product with a factor
// outside [beta, gamma].

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rvar/laurent.hpp"
#include "rvar/relation.hpp"
#include "rvar/subset.hpp"

namespace rvar {

/// Delta_a Delta_b - sum sign Delta_left Delta_right, i in b \ a.
LaurentExpression plucker_relation(const KSubset& a, const KSubset& b, int i);

/// Minimum number of random rational matrices each relation is checked against.
inline constexpr int kRelationValidationSamples = 50;

/// plucker_relation_terms(a, b, i), after checking that it vanishes on the maximal
/// minors of kRelationValidationSamples random rational matrices. A failure throws
/// InternalError. Thread-safe; results are cached.
const PluckerRelation& validated_relation(const KSubset& a, const KSubset& b, int i);

/// a <=_t b on p_bar_set(beta, gamma, t): a(i) <= b(i) for i <= t and a(i) >= b(i) for i > t.
/// Throws DomainError when a or b is outside p_bar_set.
bool precedes_t(const KSubset& a, const KSubset& b, const KSubset& beta, const KSubset& gamma, int t);

struct Certificate {
  KSubset target;
  KSubset pivot;
  KSubset beta;
  KSubset gamma;
  int t = 0;
  LaurentExpression cofactor;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Builds and memoizes cofactors for one (beta, gamma, t).
class CertificateBuilder {
 public:
  CertificateBuilder(KSubset beta, KSubset gamma, int t);

  const KSubset& pivot() const noexcept { return pivot_; }
  const SubsetFamily& domain() const noexcept { return p_bar_; }

  /// Throws DomainError when alpha is outside p_bar_set(beta, gamma, t).
  Certificate certificate(const KSubset& alpha);
  const LaurentExpression& cofactor(const KSubset& alpha);

  /// Deepest recursion reached so far.
  int max_depth() const noexcept { return max_depth_; }

 private:
  const LaurentExpression& build(const KSubset& alpha, int depth);

  KSubset beta_;
  KSubset gamma_;
  int t_;
  KSubset pivot_;
  SubsetFamily p_bar_;
  std::map<KSubset, LaurentExpression> memo_;
  int max_depth_ = 0;
};

Certificate principal_certificate(const KSubset& beta, const KSubset& gamma, int t, const KSubset& alpha);

/// When p_set(beta, gamma, t) is empty: Delta_beta = Delta_{delta_t} * e, so
/// Delta_{delta_t}^{-1} = e * Delta_beta^{-1} on the open Richardson variety.
struct UnitCertificate {
  Certificate base;           ///< target beta, pivot delta_t
  LaurentExpression inverse;  ///< e * Delta_beta^{-1}
};

/// Throws DomainError when p_set(beta, gamma, t) is nonempty.
UnitCertificate unit_certificate(const KSubset& beta, const KSubset& gamma, int t);

/// Repeated evaluation of a certificate's identity over one field.
template <ExactField F>
class CompiledCertificate {
 public:
  using value_type = typename F::value_type;

  CompiledCertificate(const Certificate& c, F field)
      : field_(field),
        target_(lex_index(c.target)),
        pivot_(lex_index(c.pivot)),
        cofactor_(c.cofactor, std::move(field), c.target.k(), c.target.n()) {}

  /// Delta_target == Delta_pivot * cofactor at the point.
  bool holds(std::span<const value_type> plucker) const {
    return field_.equal(plucker[target_], field_.mul(plucker[pivot_], cofactor_.evaluate(plucker)));
  }

 private:
  F field_;
  std::size_t target_;
  std::size_t pivot_;
  CompiledExpression<F> cofactor_;
};

/// Index of the first point at which the certificate identity fails, if any.
/// Evaluation errors are rethrown as DomainError naming the point.
template <ExactField F>
std::optional<std::size_t> find_certificate_failure(const Certificate& c, std::span<const PluckerVector<F>> points) {
  if (points.empty()) return std::nullopt;
  const CompiledCertificate<F> compiled(c, points.front().field());
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      if (!compiled.holds(points[i].values())) return i;
    } catch (const DivisionByZero& e) {
      throw DomainError("certificate evaluation failed at point " + std::to_string(i) + ": " + e.what());
    }
  }
  return std::nullopt;
}

template <ExactField F>
bool verify_certificate(const Certificate& c, std::span<const PluckerVector<F>> points) {
  return !find_certificate_failure(c, points).has_value();
}

/// Text form:
///   certificate
///   target {..}
///   pivot {..}
///   context k=K n=N beta={..} gamma={..} t=T
///   terms COUNT
///   COEFF {..}:POWER {..}:POWER ...      (one line per term)
std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

}  // namespace rvar
