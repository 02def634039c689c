#pragma once

// Exact fields: arbitrary-precision rationals (GMP) and prime fields F_p with p < 2^31.
// A field is a small descriptor object; elements are plain values of
// `Field::value_type` and every arithmetic operation goes through the descriptor.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "rvar/errors.hpp"

namespace rvar {

template <class F>
concept ExactField = std::copyable<F> && requires(const F& f, const typename F::value_type& a,
                                                  const typename F::value_type& b, const mpq_class& q,
                                                  std::string_view text) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(long{}) } -> std::same_as<typename F::value_type>;
  { f.from_rational(q) } -> std::same_as<typename F::value_type>;
  { f.add(a, b) } -> std::same_as<typename F::value_type>;
  { f.sub(a, b) } -> std::same_as<typename F::value_type>;
  { f.mul(a, b) } -> std::same_as<typename F::value_type>;
  { f.div(a, b) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.parse(text) } -> std::same_as<typename F::value_type>;
  { f.name() } -> std::same_as<std::string>;
};

/// The rationals, with values kept in canonical form (reduced, positive denominator).
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }
  value_type from_rational(const mpq_class& q) const { return q; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in Q");
    return value_type(1) / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    if (b == 0) throw DivisionByZero("division by 0 in Q");
    return a / b;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// "num/den", or "num" for integers.
  std::string format(const value_type& a) const {
    value_type c = a;
    c.canonicalize();
    return c.get_str();
  }
  value_type parse(std::string_view text) const;
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// F_p for a prime p < 2^31; elements are residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long v) const {
    const long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_rational(const mpq_class& q) const;

  value_type add(value_type a, value_type b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  std::string format(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view text) const;
  std::string name() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace rvar
