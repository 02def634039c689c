#include "rvar/field.hpp"

#include <cctype>
#include <stdexcept>

namespace rvar {

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

RationalField::value_type RationalField::parse(std::string_view text) const {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return q;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InvalidParameters(std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw DivisionByZero(q.get_str() + " has no image in " + name());
  return div(static_cast<value_type>(num.get_ui()), static_cast<value_type>(den.get_ui()));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in " + name());
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s0 < 0) s0 += p_;
  return static_cast<value_type>(s0);
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
  if (!is_integer_token(text)) throw std::invalid_argument("not a residue: '" + std::string(text) + "'");
  const long long v = std::stoll(std::string(text));
  if (v < 0 || v >= static_cast<long long>(p_)) {
    throw std::invalid_argument("residue '" + std::string(text) + "' outside [0, " + std::to_string(p_) + ")");
  }
  return static_cast<value_type>(v);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace rvar
