#include "rvar/certificate.hpp"

#include <cctype>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include "rvar/errors.hpp"
#include "rvar/matrix.hpp"
#include "rvar/plucker.hpp"

namespace rvar {

namespace {

constexpr std::uint64_t kValidationSeed = 0x5eed0f91ace5ull;

std::vector<PluckerVector<RationalField>> validation_points(int k, int n) {
  std::mt19937_64 rng(kValidationSeed ^ (static_cast<std::uint64_t>(k) << 32) ^ static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  const RationalField q;
  std::vector<PluckerVector<RationalField>> out;
  while (static_cast<int>(out.size()) < kRelationValidationSamples) {
    Matrix<RationalField> m(q, k, n);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < n; ++c) {
        mpq_class v(num(rng), den(rng));
        v.canonicalize();
        m(r, c) = v;
      }
    }
    auto p = maximal_minors(m);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

struct RelationKey {
  KSubset a;
  KSubset b;
  int i;
  friend auto operator<=>(const RelationKey&, const RelationKey&) = default;
};

}  // namespace

const PluckerRelation& validated_relation(const KSubset& a, const KSubset& b, int i) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<PluckerVector<RationalField>>> samples;
  static std::map<RelationKey, PluckerRelation> relations;

  PluckerRelation rel = plucker_relation_terms(a, b, i);
  std::lock_guard lock(mutex);
  if (auto it = relations.find({a, b, i}); it != relations.end()) return it->second;
  auto sample_it = samples.find({a.k(), a.n()});
  if (sample_it == samples.end()) {
    sample_it = samples.emplace(std::make_pair(a.k(), a.n()), validation_points(a.k(), a.n())).first;
  }
  for (const auto& p : sample_it->second) {
    if (!p.field().is_zero(evaluate_relation(rel, p))) {
      throw InternalError("Plucker relation for " + a.to_string() + ", " + b.to_string() + ", i=" +
                          std::to_string(i) + " does not vanish on maximal minors");
    }
  }
  return relations.emplace(RelationKey{a, b, i}, std::move(rel)).first->second;
}

LaurentExpression plucker_relation(const KSubset& a, const KSubset& b, int i) {
  const PluckerRelation& rel = validated_relation(a, b, i);
  LaurentExpression e = LaurentExpression::monomial(Monomial::symbol(rel.a) * Monomial::symbol(rel.b));
  for (const auto& term : rel.terms) {
    e.add_term(Monomial::symbol(term.left) * Monomial::symbol(term.right), -term.sign);
  }
  return e;
}

namespace {

bool precedes_unchecked(const KSubset& a, const KSubset& b, int t) {
  for (int i = 0; i < a.k(); ++i) {
    if (i < t ? a[i] > b[i] : a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

bool precedes_t(const KSubset& a, const KSubset& b, const KSubset& beta, const KSubset& gamma, int t) {
  const SubsetFamily domain = p_bar_set(beta, gamma, t);
  if (!domain.contains(a) || !domain.contains(b)) {
    throw DomainError("precedes_t is only defined on P-bar_t; got " + a.to_string() + ", " + b.to_string());
  }
  return precedes_unchecked(a, b, t);
}

// CertificateBuilder

CertificateBuilder::CertificateBuilder(KSubset beta, KSubset gamma, int t)
    : beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      t_(t),
      pivot_(delta(beta_, gamma_, t)),
      p_bar_(p_bar_set(beta_, gamma_, t)) {}

Certificate CertificateBuilder::certificate(const KSubset& alpha) {
  return Certificate{alpha, pivot_, beta_, gamma_, t_, cofactor(alpha)};
}

const LaurentExpression& CertificateBuilder::cofactor(const KSubset& alpha) {
  if (!p_bar_.contains(alpha)) {
    throw DomainError(alpha.to_string() + " is not in P-bar_" + std::to_string(t_) + " for [" + beta_.to_string() +
                      ", " + gamma_.to_string() + "]");
  }
  return build(alpha, 1);
}

const LaurentExpression& CertificateBuilder::build(const KSubset& alpha, int depth) {
  if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
  max_depth_ = std::max(max_depth_, depth);
  if (depth > static_cast<int>(p_bar_.size())) {
    throw InternalError("certificate recursion deeper than |P-bar_t|");
  }
  if (alpha == pivot_) return memo_.emplace(alpha, LaurentExpression::constant(1)).first->second;

  const int k = alpha.k();
  // Case (i): the first position where alpha exceeds beta lies in 1..t.
  int first_above = -1;
  for (int i = 0; i < k; ++i) {
    if (alpha[i] > beta_[i]) {
      first_above = i;
      break;
    }
  }
  // Case (ii): the last position where alpha is below gamma lies in t+1..k.
  int last_below = -1;
  for (int i = k - 1; i >= 0; --i) {
    if (alpha[i] < gamma_[i]) {
      last_below = i;
      break;
    }
  }
  const KSubset* anchor = nullptr;
  int position = -1;
  if (first_above >= 0 && first_above < t_) {
    anchor = &beta_;
    position = first_above;
  } else if (last_below >= t_) {
    anchor = &gamma_;
    position = last_below;
  } else {
    throw InternalError("neither rewriting case applies to " + alpha.to_string());
  }

  // Delta_alpha Delta_anchor = sum sign Delta_left Delta_right
  //   => e_alpha = sum sign e_left Delta_right Delta_anchor^{-1}.
  const PluckerRelation& rel = validated_relation(alpha, *anchor, (*anchor)[position]);
  const Monomial anchor_inverse = Monomial::symbol(*anchor, -1);
  LaurentExpression result;
  for (const auto& term : rel.terms) {
    if (!in_interval(term.left, beta_, gamma_) || !in_interval(term.right, beta_, gamma_)) continue;
    if (!p_bar_.contains(term.left) || term.left == alpha ||
        !precedes_unchecked(term.left, alpha, t_)) {
      throw InternalError("rewriting " + alpha.to_string() + " produced " + term.left.to_string() +
                          ", which is not strictly smaller in <=_t");
    }
    const LaurentExpression& sub = build(term.left, depth + 1);
    result += sub * LaurentExpression::monomial(Monomial::symbol(term.right) * anchor_inverse, term.sign);
  }
  return memo_.emplace(alpha, std::move(result)).first->second;
}

Certificate principal_certificate(const KSubset& beta, const KSubset& gamma, int t, const KSubset& alpha) {
  CertificateBuilder builder(beta, gamma, t);
  return builder.certificate(alpha);
}

UnitCertificate unit_certificate(const KSubset& beta, const KSubset& gamma, int t) {
  if (!p_set(beta, gamma, t).empty()) {
    throw DomainError("P_" + std::to_string(t) + " is nonempty; Delta_{delta_t} is not a unit");
  }
  Certificate base = principal_certificate(beta, gamma, t, beta);
  LaurentExpression inverse = base.cofactor * LaurentExpression::symbol(beta, -1);
  return {std::move(base), std::move(inverse)};
}

// Serialization

std::string serialize_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "certificate\n";
  out << "target " << c.target.to_string() << '\n';
  out << "pivot " << c.pivot.to_string() << '\n';
  out << "context k=" << c.target.k() << " n=" << c.target.n() << " beta=" << c.beta.to_string()
      << " gamma=" << c.gamma.to_string() << " t=" << c.t << '\n';
  out << "terms " << c.cofactor.size() << '\n';
  for (const auto& [m, coeff] : c.cofactor.terms()) {
    out << coeff.get_str();
    for (const auto& s : m.factors()) out << ' ' << s.index.to_string() << ':' << s.power;
    out << '\n';
  }
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next(std::string_view what) {
    if (pos_ >= text_.size()) throw ParseError(line_ + 1, 1, "unexpected end of input, expected " + std::string(what));
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_;
    return line;
  }
  bool done() const { return pos_ >= text_.size(); }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::string_view expect_prefix(LineReader& reader, std::string_view line, std::string_view prefix) {
  if (line.substr(0, prefix.size()) != prefix) {
    throw ParseError(reader.line(), 1, "expected '" + std::string(prefix) + "'");
  }
  return line.substr(prefix.size());
}

int parse_int(LineReader& reader, std::string_view s, std::size_t column) {
  if (s.empty()) throw ParseError(reader.line(), column, "expected an integer");
  std::size_t i = s.front() == '-' ? 1 : 0;
  if (i == s.size()) throw ParseError(reader.line(), column, "expected an integer");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError(reader.line(), column + i, "expected a digit");
  }
  return std::stoi(std::string(s));
}

KSubset parse_subset_at(LineReader& reader, std::string_view s, int n, std::size_t column) {
  try {
    return KSubset::parse(s, n);
  } catch (const ParseError& e) {
    throw ParseError(reader.line(), column + e.column() - 1, e.what());
  } catch (const Error& e) {
    throw ParseError(reader.line(), column, e.what());
  }
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  LineReader reader(text);
  if (reader.next("header") != "certificate") throw ParseError(1, 1, "expected 'certificate'");
  const std::string_view target_text = expect_prefix(reader, reader.next("target"), "target ");
  const std::size_t target_line = reader.line();
  const std::string_view pivot_text = expect_prefix(reader, reader.next("pivot"), "pivot ");
  const std::size_t pivot_line = reader.line();

  const std::string_view context = expect_prefix(reader, reader.next("context"), "context ");
  constexpr std::size_t kContextOffset = 9;  // strlen("context ") + 1
  std::istringstream fields{std::string(context)};
  std::string field;
  int k = -1, n = -1, t = -1;
  std::string beta_text, gamma_text;
  std::size_t column = kContextOffset;
  std::size_t beta_column = 0, gamma_column = 0;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError(reader.line(), column, "expected key=value");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "k") k = parse_int(reader, value, column + eq + 1);
    else if (key == "n") n = parse_int(reader, value, column + eq + 1);
    else if (key == "t") t = parse_int(reader, value, column + eq + 1);
    else if (key == "beta") { beta_text = value; beta_column = column + eq + 1; }
    else if (key == "gamma") { gamma_text = value; gamma_column = column + eq + 1; }
    else throw ParseError(reader.line(), column, "unknown context key '" + key + "'");
    column += field.size() + 1;
  }
  if (k < 1 || n < k || t < 0 || beta_text.empty() || gamma_text.empty()) {
    throw ParseError(reader.line(), 1, "incomplete context");
  }
  const KSubset beta = parse_subset_at(reader, beta_text, n, beta_column);
  const KSubset gamma = parse_subset_at(reader, gamma_text, n, gamma_column);
  if (beta.k() != k || gamma.k() != k) throw ParseError(reader.line(), 1, "context subsets do not have k elements");
  const std::size_t context_line = reader.line();

  KSubset target, pivot;
  try {
    target = KSubset::parse(target_text, n);
    pivot = KSubset::parse(pivot_text, n);
  } catch (const Error& e) {
    throw ParseError(target_text.empty() ? target_line : pivot_line, 1, e.what());
  }
  if (target.k() != k || pivot.k() != k) throw ParseError(target_line, 1, "target or pivot does not have k elements");
  if (!subset_leq(beta, gamma) || t > k) throw ParseError(context_line, 1, "invalid context");
  if (pivot != delta(beta, gamma, t)) throw ParseError(pivot_line, 1, "pivot is not delta_t of the context");

  const std::string_view count_text = expect_prefix(reader, reader.next("terms"), "terms ");
  const int count = parse_int(reader, count_text, 7);
  LaurentExpression cofactor;
  for (int term = 0; term < count; ++term) {
    const std::string_view line = reader.next("term");
    std::size_t pos = line.find(' ');
    const std::string_view coeff_text = line.substr(0, pos);
    mpq_class coeff;
    try {
      coeff = RationalField{}.parse(coeff_text);
    } catch (const std::exception& e) {
      throw ParseError(reader.line(), 1, e.what());
    }
    if (coeff == 0) throw ParseError(reader.line(), 1, "zero coefficient");
    Monomial m;
    while (pos != std::string_view::npos) {
      const std::size_t start = pos + 1;
      pos = line.find(' ', start);
      const std::string_view factor = line.substr(start, pos == std::string_view::npos ? pos : pos - start);
      const std::size_t colon = factor.rfind(':');
      if (colon == std::string_view::npos) throw ParseError(reader.line(), start + 1, "expected subset:power");
      const KSubset index = parse_subset_at(reader, factor.substr(0, colon), n, start + 1);
      if (index.k() != k) throw ParseError(reader.line(), start + 1, "symbol does not have k elements");
      const int power = parse_int(reader, factor.substr(colon + 1), start + colon + 2);
      if (power == 0) throw ParseError(reader.line(), start + colon + 2, "zero power");
      if (power < 0 && index != beta && index != gamma) {
        throw ParseError(reader.line(), start + 1, "negative power on a symbol other than beta or gamma");
      }
      if (m.power_of(index) != 0) throw ParseError(reader.line(), start + 1, "repeated symbol");
      m = m * Monomial::symbol(index, power);
    }
    if (cofactor.terms().count(m)) throw ParseError(reader.line(), 1, "repeated monomial");
    cofactor.add_term(m, coeff);
  }
  if (!reader.done()) throw ParseError(reader.line() + 1, 1, "trailing input");
  return Certificate{target, pivot, beta, gamma, t, std::move(cofactor)};
}

}  // namespace rvar
