#include "rvar/subset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "rvar/errors.hpp"

namespace rvar {

namespace {

void check_kn(int k, int n) {
  if (n < 1 || n > KSubset::kMaxN || k < 1 || k > n) {
    throw InvalidParameters("invalid (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + ")");
  }
}

void check_same_shape(const KSubset& a, const KSubset& b) {
  if (a.k() != b.k() || a.n() != b.n()) {
    throw InvalidParameters("subsets " + a.to_string() + " and " + b.to_string() +
                            " live in different S(k,n)");
  }
}

void check_t(const KSubset& beta, int t, int lo, int hi) {
  if (t < lo || t > hi) {
    throw InvalidParameters("t = " + std::to_string(t) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] for k = " + std::to_string(beta.k()));
  }
}

void check_pair(const KSubset& beta, const KSubset& gamma) {
  check_same_shape(beta, gamma);
  if (!subset_leq(beta, gamma)) {
    throw EmptyInterval("[" + beta.to_string() + ", " + gamma.to_string() + "] is empty");
  }
}

}  // namespace

KSubset::KSubset(std::span<const int> elements, int n) : k_(static_cast<int>(elements.size())), n_(n) {
  check_kn(k_, n);
  int prev = 0;
  for (int i = 0; i < k_; ++i) {
    const int x = elements[i];
    if (x <= prev || x > n) {
      std::ostringstream msg;
      msg << "not a strictly increasing subset of [1," << n << "]:";
      for (int e : elements) msg << ' ' << e;
      throw InvalidParameters(msg.str());
    }
    elems_[i] = static_cast<std::uint8_t>(x);
    mask_ |= std::uint64_t{1} << (x - 1);
    prev = x;
  }
}

KSubset::KSubset(std::initializer_list<int> elements, int n)
    : KSubset(std::span<const int>(elements.begin(), elements.size()), n) {}

KSubset KSubset::from_mask(std::uint64_t mask, int n) {
  std::vector<int> elements;
  for (int x = 1; x <= n; ++x) {
    if ((mask >> (x - 1)) & 1u) elements.push_back(x);
  }
  if (n < KSubset::kMaxN && (mask >> n) != 0) throw InvalidParameters("mask has bits above n");
  return KSubset(elements, n);
}

KSubset KSubset::initial(int k, int n) {
  check_kn(k, n);
  std::vector<int> elements(k);
  for (int i = 0; i < k; ++i) elements[i] = i + 1;
  return KSubset(elements, n);
}

KSubset KSubset::terminal(int k, int n) {
  check_kn(k, n);
  std::vector<int> elements(k);
  for (int i = 0; i < k; ++i) elements[i] = n - k + 1 + i;
  return KSubset(elements, n);
}

KSubset KSubset::parse(std::string_view text, int n) {
  std::vector<int> elements;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> KSubset {
    throw ParseError(1, pos + 1, why + " in subset '" + std::string(text) + "'");
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') return fail("expected '{'");
  ++pos;
  skip();
  if (pos < text.size() && text[pos] == '}') return fail("empty subset");
  while (true) {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return fail("expected a column index");
    elements.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      break;
    }
    return fail("expected ',' or '}'");
  }
  skip();
  if (pos != text.size()) return fail("trailing characters");
  std::sort(elements.begin(), elements.end());
  return KSubset(elements, n);
}

std::vector<int> KSubset::elements() const {
  return std::vector<int>(elems_.begin(), elems_.begin() + k_);
}

KSubset KSubset::exchange(int remove, int add) const {
  if (!contains(remove) || contains(add) || add < 1 || add > n_) {
    throw InvalidParameters("cannot exchange " + std::to_string(remove) + " for " + std::to_string(add) +
                            " in " + to_string());
  }
  return from_mask((mask_ & ~(std::uint64_t{1} << (remove - 1))) | (std::uint64_t{1} << (add - 1)), n_);
}

std::string KSubset::to_string() const {
  std::string out = "{";
  for (int i = 0; i < k_; ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int i = 0; i < a.k_; ++i) {
    if (auto c = a.elems_[i] <=> b.elems_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// SubsetFamily

SubsetFamily::SubsetFamily(int k, int n) : k_(k), n_(n) { check_kn(k, n); }

SubsetFamily::SubsetFamily(int k, int n, std::span<const KSubset> members) : SubsetFamily(k, n) {
  for (const auto& a : members) insert(a);
}

void SubsetFamily::check(const KSubset& a) const {
  if (a.k() != k_ || a.n() != n_) {
    throw InvalidParameters(a.to_string() + " is not in S(" + std::to_string(k_) + "," + std::to_string(n_) +
                            ")");
  }
}

bool SubsetFamily::insert(const KSubset& a) {
  check(a);
  return members_.insert(a).second;
}

SubsetFamily SubsetFamily::intersect(const SubsetFamily& other) const {
  SubsetFamily out(k_, n_);
  for (const auto& a : members_) {
    if (other.contains(a)) out.members_.insert(a);
  }
  return out;
}

SubsetFamily SubsetFamily::unite(const SubsetFamily& other) const {
  SubsetFamily out = *this;
  for (const auto& a : other) out.insert(a);
  return out;
}

SubsetFamily SubsetFamily::complement() const {
  SubsetFamily out(k_, n_);
  for (const auto& a : enumerate_subsets(k_, n_)) {
    if (!contains(a)) out.members_.insert(a);
  }
  return out;
}

bool SubsetFamily::is_subfamily_of(const SubsetFamily& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](const KSubset& a) { return other.contains(a); });
}

std::string SubsetFamily::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& a : members_) {
    if (!first) out += ',';
    out += a.to_string();
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(const SubsetFamily& a, const SubsetFamily& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                b.members_.end());
}

// Free functions

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
  return result;
}

const std::vector<KSubset>& enumerate_subsets(int k, int n) {
  check_kn(k, n);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<KSubset>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({k, n});
  if (inserted) {
    std::vector<int> current(k);
    for (int i = 0; i < k; ++i) current[i] = i + 1;
    while (true) {
      it->second.emplace_back(current, n);
      int i = k - 1;
      while (i >= 0 && current[i] == n - k + 1 + i) --i;
      if (i < 0) break;
      ++current[i];
      for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
    }
  }
  return it->second;
}

std::size_t lex_index(const KSubset& a) {
  const int k = a.k();
  const int n = a.n();
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int x = prev + 1; x < a[i]; ++x) rank += binomial(n - x, k - i - 1);
    prev = a[i];
  }
  return rank;
}

bool subset_leq(const KSubset& a, const KSubset& b) {
  check_same_shape(a, b);
  for (int i = 0; i < a.k(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool in_interval(const KSubset& a, const KSubset& beta, const KSubset& gamma) {
  return subset_leq(beta, a) && subset_leq(a, gamma);
}

SubsetFamily interval(const KSubset& beta, const KSubset& gamma) {
  check_pair(beta, gamma);
  SubsetFamily out(beta.k(), beta.n());
  for (const auto& a : enumerate_subsets(beta.k(), beta.n())) {
    if (in_interval(a, beta, gamma)) out.insert(a);
  }
  return out;
}

bool covers(const KSubset& a, const KSubset& b) {
  check_same_shape(a, b);
  int raised = 0;
  for (int i = 0; i < a.k(); ++i) {
    if (b[i] == a[i]) continue;
    if (b[i] != a[i] + 1) return false;
    ++raised;
  }
  return raised == 1;
}

KSubset delta(const KSubset& beta, const KSubset& gamma, int t) {
  check_pair(beta, gamma);
  check_t(beta, t, 0, beta.k());
  std::vector<int> elements(beta.k());
  for (int i = 0; i < beta.k(); ++i) elements[i] = i < t ? beta[i] : gamma[i];
  return KSubset(elements, beta.n());
}

namespace {

// alpha meets the integer interval [beta(t+1), gamma(t)] (1-based t).
bool meets_window(const KSubset& a, const KSubset& beta, const KSubset& gamma, int t) {
  const int lo = beta[t];
  const int hi = gamma[t - 1];
  for (int i = 0; i < a.k(); ++i) {
    if (a[i] >= lo && a[i] <= hi) return true;
  }
  return false;
}

}  // namespace

SubsetFamily p_set(const KSubset& beta, const KSubset& gamma, int t) {
  check_pair(beta, gamma);
  check_t(beta, t, 1, beta.k() - 1);
  SubsetFamily out(beta.k(), beta.n());
  for (const auto& a : interval(beta, gamma)) {
    if (meets_window(a, beta, gamma, t)) out.insert(a);
  }
  return out;
}

SubsetFamily p_bar_set(const KSubset& beta, const KSubset& gamma, int t) {
  check_pair(beta, gamma);
  check_t(beta, t, 1, beta.k() - 1);
  SubsetFamily out(beta.k(), beta.n());
  for (const auto& a : interval(beta, gamma)) {
    if (!meets_window(a, beta, gamma, t)) out.insert(a);
  }
  return out;
}

SubsetFamily i_set(const KSubset& beta, const KSubset& gamma, int t) {
  check_pair(beta, gamma);
  check_t(beta, t, 1, beta.k() - 1);
  SubsetFamily out(beta.k(), beta.n());
  for (const auto& a : enumerate_subsets(beta.k(), beta.n())) {
    if (meets_window(a, beta, gamma, t)) out.insert(a);
  }
  return out;
}

KSubset cyclic_shift(const KSubset& a, int j) {
  const int n = a.n();
  const int shift = ((j % n) + n) % n;
  std::vector<int> elements;
  elements.reserve(a.k());
  for (int i = 0; i < a.k(); ++i) elements.push_back((a[i] - 1 + shift) % n + 1);
  std::sort(elements.begin(), elements.end());
  return KSubset(elements, n);
}

KSubset epsilon(const KSubset& beta, const KSubset& gamma, int t) {
  check_pair(beta, gamma);
  check_t(beta, t, 1, beta.k() - 1);
  const int k = beta.k();
  const int n = beta.n();
  if (beta[t] > gamma[t - 1]) {
    throw InvalidParameters("epsilon needs a nonempty P_t, but beta(t+1) > gamma(t)");
  }
  const int last = n - gamma[t - 1] + beta[t];
  if (last < k) {
    throw InvalidParameters("epsilon's last element " + std::to_string(last) + " is below k");
  }
  std::vector<int> elements(k);
  for (int i = 0; i < k - 1; ++i) elements[i] = i + 1;
  elements[k - 1] = last;
  return KSubset(elements, n);
}

std::vector<SubsetFamily> SigmaSets::all() const {
  std::vector<SubsetFamily> out = sigma0;
  out.insert(out.end(), sigma1.begin(), sigma1.end());
  out.insert(out.end(), sigma2.begin(), sigma2.end());
  return out;
}

SigmaSets sigma_sets(const KSubset& beta, const KSubset& gamma, CoverBound bound) {
  check_pair(beta, gamma);
  SigmaSets out;
  auto push_unique = [](std::vector<SubsetFamily>& into, SubsetFamily f) {
    if (std::find(into.begin(), into.end(), f) == into.end()) into.push_back(std::move(f));
  };
  for (int t = 1; t <= beta.k() - 1; ++t) {
    auto p = p_set(beta, gamma, t);
    if (!p.empty()) push_unique(out.sigma0, std::move(p));
  }
  for (const auto& a : enumerate_subsets(beta.k(), beta.n())) {
    const bool below_gamma = bound == CoverBound::strict ? subset_leq(a, gamma) && a != gamma
                                                         : subset_leq(a, gamma);
    if (covers(beta, a) && below_gamma) push_unique(out.sigma1, interval(a, gamma));
    const bool above_beta = bound == CoverBound::strict ? subset_leq(beta, a) && a != beta
                                                        : subset_leq(beta, a);
    if (covers(a, gamma) && above_beta) push_unique(out.sigma2, interval(beta, a));
  }
  return out;
}

int subset_rank(const KSubset& a) {
  int r = 0;
  for (int i = 0; i < a.k(); ++i) r += a[i] - (i + 1);
  return r;
}

}  // namespace rvar
