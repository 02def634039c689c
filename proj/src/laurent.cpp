#include "rvar/laurent.hpp"

#include <algorithm>

namespace rvar {

Monomial Monomial::symbol(const KSubset& index, int power) {
  Monomial m;
  if (power != 0) m.factors_.push_back({index, power});
  return m;
}

int Monomial::power_of(const KSubset& index) const {
  for (const auto& s : factors_) {
    if (s.index == index) return s.power;
  }
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& s : factors_) d += s.power;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  while (x != a.factors_.end() || y != b.factors_.end()) {
    if (y == b.factors_.end() || (x != a.factors_.end() && x->index < y->index)) {
      out.factors_.push_back(*x++);
    } else if (x == a.factors_.end() || y->index < x->index) {
      out.factors_.push_back(*y++);
    } else {
      const int power = x->power + y->power;
      if (power != 0) out.factors_.push_back({x->index, power});
      ++x;
      ++y;
    }
  }
  return out;
}

LaurentExpression LaurentExpression::constant(const mpq_class& c) { return monomial(Monomial(), c); }

LaurentExpression LaurentExpression::symbol(const KSubset& index, int power) {
  return monomial(Monomial::symbol(index, power));
}

LaurentExpression LaurentExpression::monomial(const Monomial& m, const mpq_class& c) {
  LaurentExpression e;
  e.add_term(m, c);
  return e;
}

void LaurentExpression::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentExpression& LaurentExpression::operator+=(const LaurentExpression& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentExpression& LaurentExpression::operator-=(const LaurentExpression& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentExpression operator*(const LaurentExpression& a, const LaurentExpression& b) {
  LaurentExpression out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentExpression LaurentExpression::scaled(const mpq_class& c) const {
  LaurentExpression out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

std::string LaurentExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    for (const auto& s : m.factors()) {
      out += "*D" + s.index.to_string();
      if (s.power != 1) out += "^" + std::to_string(s.power);
    }
  }
  return out;
}

}  // namespace rvar
