#pragma once

// Laurent polynomials in the Plucker symbols Delta_alpha with rational coefficients,
// kept fully expanded as a map from monomial to coefficient.

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rvar/errors.hpp"
#include "rvar/field.hpp"
#include "rvar/plucker.hpp"
#include "rvar/subset.hpp"

namespace rvar {

struct PluckerSymbol {
  KSubset index;
  int power = 1;

  friend bool operator==(const PluckerSymbol&, const PluckerSymbol&) = default;
  friend auto operator<=>(const PluckerSymbol&, const PluckerSymbol&) = default;
};

/// A product of Plucker symbols; factors sorted by index, no zero powers.
class Monomial {
 public:
  Monomial() = default;
  static Monomial symbol(const KSubset& index, int power = 1);

  const std::vector<PluckerSymbol>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  int power_of(const KSubset& index) const;
  int degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<PluckerSymbol> factors_;
};

class LaurentExpression {
 public:
  using TermMap = std::map<Monomial, mpq_class>;

  LaurentExpression() = default;
  static LaurentExpression constant(const mpq_class& c);
  static LaurentExpression symbol(const KSubset& index, int power = 1);
  static LaurentExpression monomial(const Monomial& m, const mpq_class& c = 1);

  void add_term(const Monomial& m, const mpq_class& c);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  LaurentExpression& operator+=(const LaurentExpression& other);
  LaurentExpression& operator-=(const LaurentExpression& other);
  friend LaurentExpression operator+(LaurentExpression a, const LaurentExpression& b) { return a += b; }
  friend LaurentExpression operator-(LaurentExpression a, const LaurentExpression& b) { return a -= b; }
  friend LaurentExpression operator*(const LaurentExpression& a, const LaurentExpression& b);
  LaurentExpression scaled(const mpq_class& c) const;

  /// Human-readable, e.g. "-1*D{1,2}^-1*D{2,4} + 3".
  std::string to_string() const;

  friend bool operator==(const LaurentExpression&, const LaurentExpression&) = default;

 private:
  TermMap terms_;
};

/// An expression flattened to coordinate indices for repeated evaluation over one field.
template <ExactField F>
class CompiledExpression {
 public:
  using value_type = typename F::value_type;

  CompiledExpression(const LaurentExpression& expr, F field, int k, int n) : field_(std::move(field)) {
    for (const auto& [mono, coeff] : expr.terms()) {
      Term term{field_.from_rational(coeff), {}};
      for (const auto& s : mono.factors()) {
        if (s.index.k() != k || s.index.n() != n) {
          throw InvalidParameters("symbol " + s.index.to_string() + " is not a coordinate of Gr(k,n)");
        }
        term.factors.emplace_back(lex_index(s.index), s.power);
      }
      terms_.push_back(std::move(term));
    }
  }

  /// Throws DivisionByZero when a symbol with negative power evaluates to zero.
  value_type evaluate(std::span<const value_type> plucker) const {
    auto total = field_.zero();
    for (const auto& term : terms_) {
      auto product = term.coeff;
      for (const auto& [index, power] : term.factors) {
        const auto& v = plucker[index];
        auto base = v;
        if (power < 0) {
          if (field_.is_zero(v)) throw DivisionByZero("negative power of a vanishing Plucker coordinate");
          base = field_.inv(v);
        }
        for (int e = std::abs(power); e > 0; --e) product = field_.mul(product, base);
      }
      total = field_.add(total, product);
    }
    return total;
  }

 private:
  struct Term {
    value_type coeff;
    std::vector<std::pair<std::size_t, int>> factors;
  };
  F field_;
  std::vector<Term> terms_;
};

/// Exact value of `expr` at `p`. Absent coordinates are never treated as zero:
/// every symbol is read from `p`.
template <ExactField F>
typename F::value_type evaluate(const LaurentExpression& expr, const PluckerVector<F>& p) {
  return CompiledExpression<F>(expr, p.field(), p.k(), p.n()).evaluate(p.values());
}

}  // namespace rvar
